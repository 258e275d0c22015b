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
  var n0 = 18;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[6];
  exec("insert t1", b % 100, 9);
  var i2 = 0;
  while (i2 < 7) {
    arr1[i2 % 6] = 0.5;
    bump(box, i2 % 3);
    var x3 = 12;
    i2 = i2 + 1;
  }
  exec("insert t1", 12 % 100, 2);
  var r4 = query("get t1 k=? n", b % 3);
  var s5 = 0;
  if (len(r4) > 0) {
    s5 = r4[0];
  }
  var q6 = lookup(n0 + 0);
  var g7 = box.count;
  var c8 = scale((b + b) % 3, 2);
  var r9 = query("get t1 k=? n", 14 % 3);
  var s10 = 0;
  if (len(r9) > 0) {
    s10 = r9[0];
  }
  var q11 = lookup(11);
  exec("insert t1", c8 % 100, s5 * 2);
  var c12 = scale(s5, 3);
  var p13 = 4 < c8 + 2;
  if (p13) {
    b = g7 + 0;
  }
  var x14 = c8 + 4;
  var g15 = box.count;
  var p16 = 2 < c12;
  if (p16) {
    b = s10 + 3;
  } else {
    s10 = s10 + 1;
  }
  var c17 = scale(0, 1);
  exec("insert t1", (c12 + c12) % 5 % 100, s5 + 5);
  exec("update t0 k=? v=?", (c8 + n0) % 4 % 5, 3.7);
  var c18 = scale(c17, 3);
  print("out", a, b, n0, s5, q6, g7, c8, s10, q11, c12, x14, g15, c17, c18);
  print("box", box.count, box.amount);
}

entry main;
