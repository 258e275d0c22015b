class Box {
  int count;
  float amount;
}

fn scale(v, k) {
  return v * k + 1;
}

fn lookup(key) {
  var r = query("get t0 k=? v", key % 5);
  var out = 0.0;
  if (len(r) > 0) {
    out = r[0];
  }
  return out;
}

fn bump(b, d) {
  b.count = b.count + d;
  b.amount = b.amount + b.count * 0.5;
}

fn main(a, b) {
  var n0 = (a + b) % 4;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[8];
  var r2 = query("get t1 k=? n", a % 3);
  var s3 = 0;
  if (len(r2) > 0) {
    s3 = r2[0];
  }
  exec("insert t1", 19 % 100, b * 1);
  exec("insert t1", n0 + 8 % 100, 10);
  exec("update t0 k=? v=?", s3 % 5, 0.5);
  var r4 = query("get t1 k=? n", (a + n0) % 2 % 3);
  var s5 = 0;
  if (len(r4) > 0) {
    s5 = r4[0];
  }
  var i6 = 0;
  while (i6 < 7) {
    arr1[i6 % 8] = 0.5;
    bump(box, i6 % 3);
    i6 = i6 + 1;
  }
  var f7 = 1.5 * 1.5;
  exec("update t0 k=? v=?", n0 + 5 % 5, f7);
  var q8 = lookup(a + 1);
  var c9 = scale(b, 3);
  var r10 = query("get t1 k=? n", n0 + 8 % 3);
  var s11 = 0;
  if (len(r10) > 0) {
    s11 = r10[0];
  }
  var p12 = (s11 + s3) % 6 < 8;
  if (p12) {
    s11 = b * 2;
  }
  box.count = box.count + n0 + 3;
  var f13 = 6.7;
  exec("update t0 k=? v=?", s11 * 4 % 5, 7.3);
  var c14 = scale(c9, 3);
  print("out", a, b, n0, s3, s5, f7, q8, c9, s11, f13, c14);
  print("box", box.count, box.amount);
}

entry main;
