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
  var n0 = a;
  var x1 = b;
  var r2 = query("get t1 k=? n", 17 % 3);
  var s3 = 0;
  if (len(r2) > 0) {
    s3 = r2[0];
  }
  exec("insert t1", x1 * 3 % 100, (s3 + a) % 5);
  var q4 = lookup(x1);
  var f5 = q4 * 3.5;
  var r6 = query("get t1 k=? n", 18 % 3);
  var s7 = 0;
  if (len(r6) > 0) {
    s7 = r6[0];
  }
  var c8 = scale(s3 + 4, 1);
  var c9 = scale(s7 + 7, 2);
  var q10 = lookup(s3 * 1);
  var p11 = c8 * 3 < b * 2;
  if (p11) {
    n0 = a + 6;
  } else {
    c8 = 18;
  }
  exec("insert t1", n0 % 100, a * 1);
  var r12 = query("get t1 k=? n", s7 * 1 % 3);
  var s13 = 0;
  if (len(r12) > 0) {
    s13 = r12[0];
  }
  exec("update t0 k=? v=?", b * 3 % 5, q10);
  exec("insert t1", 3 % 100, (s7 + b) % 8);
  var x14 = c9 * 1;
  var p15 = n0 + 8 < (x1 + s13) % 3;
  if (p15) {
    x14 = s3 * 1;
  }
  exec("insert t1", c9 % 100, 7);
  var q16 = lookup(c9 * 2);
  var r17 = query("get t1 k=? n", c9 % 3);
  var s18 = 0;
  if (len(r17) > 0) {
    s18 = r17[0];
  }
  print("out", a, b, n0, x1, s3, q4, f5, s7, c8, c9, q10, s13, x14, q16, s18);
}

entry main;
