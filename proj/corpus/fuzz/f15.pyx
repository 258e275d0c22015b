class Box {
  int count;
  float amount;
}

fn scale(v, k) {
  return v * k + 1;
}

fn bump(b, d) {
  b.count = b.count + d;
  b.amount = b.amount + b.count * 0.5;
}

fn main(a, b) {
  var n0 = a + 1;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[8];
  var x2 = 6;
  var x3 = x2;
  exec("update t0 k=? v=?", (x2 + n0) % 7 % 5, 8.5);
  exec("insert t1", 17 % 100, x3 + 2);
  exec("insert t1", x2 * 4 % 100, x3 + 3);
  b = a + 5;
  var r4 = query("get t1 k=? n", (n0 + a) % 8 % 3);
  var s5 = 0;
  if (len(r4) > 0) {
    s5 = r4[0];
  }
  var i6 = 0;
  while (i6 < 5) {
    arr1[i6 % 8] = 1.5 * 1.5;
    bump(box, i6 % 3);
    var f7 = 1.5 * 0.5;
    i6 = i6 + 1;
  }
  var x8 = a + 7;
  var i9 = 0;
  while (i9 < 6) {
    arr1[i9 % 8] = 1.5 * 1.5;
    var g10 = box.count;
    i9 = i9 + 1;
  }
  var x11 = 13;
  var x12 = x2;
  var x13 = (n0 + x3) % 5;
  exec("update t0 k=? v=?", x11 * 1 % 5, 0.5);
  var f14 = 1.5 * 1.5;
  var i15 = 0;
  while (i15 < 6) {
    arr1[i15 % 8] = f14;
    bump(box, i15 % 3);
    exec("insert t1", s5 * 3 % 100, b * 3);
    i15 = i15 + 1;
  }
  x11 = x13;
  var x16 = b + 1;
  exec("insert t1", x13 * 1 % 100, a * 2);
  print("out", a, b, n0, x2, x3, s5, x8, x11, x12, x13, f14, x16);
  print("box", box.count, box.amount);
}

entry main;
