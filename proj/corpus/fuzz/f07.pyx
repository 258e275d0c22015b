fn scale(v, k) {
  return v * k + 1;
}

fn main(a, b) {
  var n0 = a;
  var arr1 = new float[4];
  var f2 = 1.5 * 2.5;
  n0 = n0;
  var c3 = scale((n0 + b) % 8, 3);
  exec("update t0 k=? v=?", c3 % 5, f2);
  b = (b + a) % 4;
  exec("insert t1", n0 * 2 % 100, 19);
  var x4 = c3 * 4;
  var i5 = 0;
  while (i5 < 7) {
    arr1[i5 % 4] = f2 * 1.5;
    i5 = i5 + 1;
  }
  n0 = 5;
  var i6 = 0;
  while (i6 < 5) {
    arr1[i6 % 4] = f2 * 0.5;
    exec("update t0 k=? v=?", (x4 + c3) % 3 % 5, 0.1);
    i6 = i6 + 1;
  }
  c3 = n0 * 2;
  x4 = 13;
  var p7 = b < 11;
  if (p7) {
    n0 = x4 + 6;
  } else {
    c3 = 10;
  }
  var c8 = scale(a + 2, 3);
  exec("update t0 k=? v=?", 17 % 5, 1.7);
  print("out", a, b, n0, f2, c3, x4, c8);
}

entry main;
