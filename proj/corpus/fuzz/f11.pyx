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
  var n0 = (a + a) % 5;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[8];
  var x2 = a;
  var c3 = scale((x2 + n0) % 7, 3);
  var r4 = query("get t1 k=? n", c3 % 3);
  var s5 = 0;
  if (len(r4) > 0) {
    s5 = r4[0];
  }
  var r6 = query("get t1 k=? n", c3 * 1 % 3);
  var s7 = 0;
  if (len(r6) > 0) {
    s7 = r6[0];
  }
  var g8 = box.count;
  var f9 = 1.5 * 1.5;
  var r10 = query("get t1 k=? n", s5 % 3);
  var s11 = 0;
  if (len(r10) > 0) {
    s11 = r10[0];
  }
  var i12 = 0;
  while (i12 < 6) {
    arr1[i12 % 8] = f9;
    box.count = box.count + s7;
    i12 = i12 + 1;
  }
  box.count = box.count + n0;
  var i13 = 0;
  while (i13 < 5) {
    arr1[i13 % 8] = f9 * 0.5;
    bump(box, i13 % 3);
    var x14 = (c3 + s11) % 8;
    i13 = i13 + 1;
  }
  var f15 = 6.2;
  var f16 = f9;
  var q17 = lookup((a + s11) % 2);
  var c18 = scale(s5 * 1, 2);
  var f19 = f15 * 0.5;
  box.count = box.count + c18 * 2;
  print("out", a, b, n0, x2, c3, s5, s7, g8, f9, s11, f15, f16, q17, c18, f19);
  print("box", box.count, box.amount);
}

entry main;
