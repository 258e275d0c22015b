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
  var n0 = b + 1;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[7];
  var c2 = scale(3, 2);
  var q3 = lookup(b * 2);
  exec("insert t1", (b + b) % 5 % 100, (c2 + a) % 8);
  var f4 = q3;
  var f5 = 1.5;
  exec("insert t1", n0 + 5 % 100, c2 + 2);
  var q6 = lookup(n0 * 3);
  var c7 = scale(b * 1, 3);
  var g8 = box.count;
  var r9 = query("get t1 k=? n", n0 * 1 % 3);
  var s10 = 0;
  if (len(r9) > 0) {
    s10 = r9[0];
  }
  exec("update t0 k=? v=?", (b + g8) % 8 % 5, 6.7);
  var c11 = scale(c7 * 4, 2);
  var c12 = scale(n0 + 2, 2);
  var c13 = scale(g8, 1);
  var p14 = c12 * 2 < g8 * 1;
  if (p14) {
    b = s10 + 1;
  } else {
    a = s10 * 2;
  }
  var x15 = 13;
  exec("insert t1", x15 * 2 % 100, b + 7);
  var c16 = scale((s10 + n0) % 7, 3);
  var x17 = a;
  var c18 = scale(b, 3);
  exec("insert t1", c18 * 1 % 100, 1);
  var q19 = lookup(c2 + 7);
  print("out", a, b, n0, c2, q3, f4, f5, q6, c7, g8, s10, c11, c12, c13, x15, c16, x17, c18, q19);
  print("box", box.count, box.amount);
}

entry main;
