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

fn main(a, b) {
  var n0 = a * 3;
  var arr1 = new float[7];
  var x2 = b;
  var q3 = lookup((a + a) % 8);
  exec("update t0 k=? v=?", (n0 + a) % 6 % 5, 5.5);
  var p4 = b < (a + x2) % 7;
  if (p4) {
    n0 = (x2 + x2) % 3;
  } else {
    b = 11;
  }
  var c5 = scale(x2, 2);
  var p6 = c5 * 1 < a * 1;
  if (p6) {
    a = (x2 + a) % 2;
  } else {
    a = 18;
  }
  var p7 = a * 4 < (x2 + b) % 4;
  if (p7) {
    a = b;
  } else {
    x2 = 4;
  }
  var i8 = 0;
  while (i8 < 3) {
    arr1[i8 % 7] = q3;
    var q9 = lookup(b);
    i8 = i8 + 1;
  }
  var p10 = b * 2 < b * 1;
  if (p10) {
    n0 = b;
  } else {
    b = 2;
  }
  var r11 = query("get t1 k=? n", 18 % 3);
  var s12 = 0;
  if (len(r11) > 0) {
    s12 = r11[0];
  }
  var x13 = (b + a) % 2;
  exec("insert t1", c5 % 100, x2);
  var r14 = query("get t1 k=? n", n0 + 2 % 3);
  var s15 = 0;
  if (len(r14) > 0) {
    s15 = r14[0];
  }
  var i16 = 0;
  while (i16 < 5) {
    arr1[i16 % 7] = 7.6;
    exec("insert t1", (s15 + x13) % 7 % 100, 9);
    i16 = i16 + 1;
  }
  c5 = c5;
  var f17 = q3 * 1.5;
  s12 = n0 + 4;
  var f18 = q3;
  print("out", a, b, n0, x2, q3, c5, s12, x13, s15, f17, f18);
}

entry main;
