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
  var n0 = 4;
  var box = new Box();
  box.count = a % 7;
  var c1 = scale(13, 3);
  var x2 = a + 1;
  c1 = a + 5;
  var x3 = x2;
  exec("update t0 k=? v=?", (x2 + x2) % 5 % 5, 0.5);
  var x4 = a * 4;
  exec("update t0 k=? v=?", c1 + 1 % 5, 5.7);
  exec("insert t1", 10 % 100, a);
  exec("update t0 k=? v=?", n0 % 5, 0.5);
  var r5 = query("get t1 k=? n", a * 2 % 3);
  var s6 = 0;
  if (len(r5) > 0) {
    s6 = r5[0];
  }
  exec("insert t1", c1 % 100, (x2 + n0) % 6);
  box.count = box.count + x4;
  x2 = s6 * 2;
  var q7 = lookup(s6 + 0);
  var c8 = scale(x2 * 2, 1);
  var r9 = query("get t1 k=? n", c1 * 4 % 3);
  var s10 = 0;
  if (len(r9) > 0) {
    s10 = r9[0];
  }
  box.count = box.count + 16;
  var f11 = q7 * 3.5;
  var q12 = lookup((a + a) % 8);
  var q13 = lookup(x2 + 1);
  exec("update t0 k=? v=?", b + 7 % 5, 0.9);
  print("out", a, b, n0, c1, x2, x3, x4, s6, q7, c8, s10, f11, q12, q13);
  print("box", box.count, box.amount);
}

entry main;
