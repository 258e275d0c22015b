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
  var n0 = 8;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[6];
  var x2 = b * 4;
  var r3 = query("get t1 k=? n", b + 7 % 3);
  var s4 = 0;
  if (len(r3) > 0) {
    s4 = r3[0];
  }
  exec("insert t1", 13 % 100, n0);
  exec("insert t1", s4 % 100, (n0 + b) % 7);
  var p5 = b + 3 < 0;
  if (p5) {
    x2 = (b + a) % 5;
  }
  var r6 = query("get t1 k=? n", b * 3 % 3);
  var s7 = 0;
  if (len(r6) > 0) {
    s7 = r6[0];
  }
  exec("insert t1", s4 * 1 % 100, s4 * 3);
  box.count = box.count + (x2 + a) % 4;
  var q8 = lookup(s4 * 1);
  var g9 = box.count;
  var x10 = 4;
  exec("update t0 k=? v=?", (n0 + x2) % 7 % 5, q8 * 3.5);
  var c11 = scale(g9, 1);
  print("out", a, b, n0, x2, s4, s7, q8, g9, x10, c11);
  print("box", box.count, box.amount);
}

entry main;
