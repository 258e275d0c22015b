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
  var arr1 = new float[5];
  var f2 = 0.0;
  var r3 = query("get t1 k=? n", b + 5 % 3);
  var s4 = 0;
  if (len(r3) > 0) {
    s4 = r3[0];
  }
  var r5 = query("get t1 k=? n", n0 + 2 % 3);
  var s6 = 0;
  if (len(r5) > 0) {
    s6 = r5[0];
  }
  var i7 = 0;
  while (i7 < 5) {
    arr1[i7 % 5] = f2 * 1.5;
    var f8 = f2;
    i7 = i7 + 1;
  }
  var f9 = f2;
  var i10 = 0;
  while (i10 < 5) {
    arr1[i10 % 5] = f2 * 2.5;
    i10 = i10 + 1;
  }
  var c11 = scale((s6 + a) % 5, 3);
  var f12 = f9 * 0.5;
  var p13 = b < a + 5;
  if (p13) {
    s6 = a + 0;
  } else {
    n0 = (n0 + s6) % 5;
  }
  var f14 = f9;
  var r15 = query("get t1 k=? n", (s6 + s6) % 8 % 3);
  var s16 = 0;
  if (len(r15) > 0) {
    s16 = r15[0];
  }
  var c17 = scale(17, 1);
  exec("insert t1", s6 + 6 % 100, c17);
  exec("update t0 k=? v=?", n0 % 5, 6.6);
  var f18 = 1.1;
  s16 = c11;
  var x19 = a;
  var f20 = f14 * 3.5;
  exec("update t0 k=? v=?", s6 * 3 % 5, f9 * 2.5);
  exec("update t0 k=? v=?", s4 + 5 % 5, f2);
  print("out", a, b, n0, f2, s4, s6, f9, c11, f12, f14, s16, c17, f18, x19, f20);
}

entry main;
