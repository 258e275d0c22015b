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
  var n0 = b + 0;
  var arr1 = new float[8];
  var x2 = b * 1;
  var f3 = 3.8;
  var q4 = lookup(5);
  var r5 = query("get t1 k=? n", (b + x2) % 4 % 3);
  var s6 = 0;
  if (len(r5) > 0) {
    s6 = r5[0];
  }
  var f7 = f3;
  exec("update t0 k=? v=?", x2 % 5, f7);
  exec("insert t1", (b + s6) % 4 % 100, (n0 + n0) % 4);
  exec("update t0 k=? v=?", a * 2 % 5, q4 * 2.5);
  var i8 = 0;
  while (i8 < 2) {
    arr1[i8 % 8] = q4;
    i8 = i8 + 1;
  }
  exec("insert t1", (s6 + x2) % 4 % 100, x2 + 6);
  s6 = b * 4;
  var r9 = query("get t1 k=? n", s6 * 3 % 3);
  var s10 = 0;
  if (len(r9) > 0) {
    s10 = r9[0];
  }
  var x11 = (x2 + a) % 5;
  var p12 = s10 * 4 < 5;
  if (p12) {
    a = x11;
  } else {
    a = (a + x11) % 2;
  }
  var r13 = query("get t1 k=? n", x11 % 3);
  var s14 = 0;
  if (len(r13) > 0) {
    s14 = r13[0];
  }
  exec("insert t1", b * 4 % 100, (s6 + s10) % 2);
  var i15 = 0;
  while (i15 < 7) {
    arr1[i15 % 8] = f3;
    i15 = i15 + 1;
  }
  var r16 = query("get t1 k=? n", x11 % 3);
  var s17 = 0;
  if (len(r16) > 0) {
    s17 = r16[0];
  }
  print("out", a, b, n0, x2, f3, q4, s6, f7, s10, x11, s14, s17);
}

entry main;
