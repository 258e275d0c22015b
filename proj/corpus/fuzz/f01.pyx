fn scale(v, k) {
  return v * k + 1;
}

fn main(a, b) {
  var n0 = 4;
  var arr1 = new float[8];
  var p2 = n0 * 3 < a * 1;
  if (p2) {
    b = a;
  }
  exec("insert t1", n0 * 3 % 100, (a + b) % 8);
  var x3 = a + 8;
  exec("update t0 k=? v=?", a % 5, 0.5);
  var p4 = x3 < (a + x3) % 2;
  if (p4) {
    x3 = 4;
  }
  var p5 = b + 4 < (x3 + a) % 8;
  if (p5) {
    b = b;
  } else {
    x3 = b;
  }
  var r6 = query("get t1 k=? n", 5 % 3);
  var s7 = 0;
  if (len(r6) > 0) {
    s7 = r6[0];
  }
  n0 = n0 + 4;
  exec("insert t1", b * 4 % 100, n0 * 1);
  var f8 = 1.5 * 0.5;
  var r9 = query("get t1 k=? n", n0 % 3);
  var s10 = 0;
  if (len(r9) > 0) {
    s10 = r9[0];
  }
  var p11 = 4 < 3;
  if (p11) {
    b = s7;
  } else {
    x3 = n0;
  }
  exec("insert t1", 15 % 100, x3);
  exec("update t0 k=? v=?", 9 % 5, 4.2);
  var i12 = 0;
  while (i12 < 5) {
    arr1[i12 % 8] = f8 * 3.5;
    i12 = i12 + 1;
  }
  var p13 = s10 < s10 * 4;
  if (p13) {
    x3 = s10;
  }
  print("out", a, b, n0, x3, s7, f8, s10);
}

entry main;
