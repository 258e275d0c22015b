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
  var n0 = 3;
  var box = new Box();
  box.count = a % 7;
  var p1 = 10 < n0 * 3;
  if (p1) {
    b = (n0 + b) % 4;
  } else {
    b = n0;
  }
  n0 = n0 + 8;
  b = b;
  exec("insert t1", 5 % 100, n0 + 4);
  exec("update t0 k=? v=?", (b + n0) % 5 % 5, 0.5);
  var x2 = n0 + 5;
  exec("update t0 k=? v=?", x2 % 5, 1.5 * 0.5);
  exec("update t0 k=? v=?", (b + x2) % 7 % 5, 3.7);
  var c3 = scale(a, 2);
  exec("update t0 k=? v=?", n0 * 3 % 5, 1.5 * 1.5);
  var c4 = scale(n0, 2);
  var r5 = query("get t1 k=? n", a + 3 % 3);
  var s6 = 0;
  if (len(r5) > 0) {
    s6 = r5[0];
  }
  var p7 = 2 < (x2 + b) % 2;
  if (p7) {
    c4 = b * 4;
  }
  var r8 = query("get t1 k=? n", x2 * 2 % 3);
  var s9 = 0;
  if (len(r8) > 0) {
    s9 = r8[0];
  }
  var f10 = 7.2;
  print("out", a, b, n0, x2, c3, c4, s6, s9, f10);
  print("box", box.count, box.amount);
}

entry main;
