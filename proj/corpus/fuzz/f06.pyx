class Box {
  int count;
  float amount;
}

fn scale(v, k) {
  return v * k + 1;
}

fn bump(b, d) {
  b.count = b.count + d;
  b.amount = b.amount + b.count * 0.5;
}

fn main(a, b) {
  var n0 = a;
  var box = new Box();
  box.count = a % 7;
  var f1 = 1.5 * 2.5;
  var c2 = scale(7, 2);
  var x3 = a + 6;
  var r4 = query("get t1 k=? n", 5 % 3);
  var s5 = 0;
  if (len(r4) > 0) {
    s5 = r4[0];
  }
  var c6 = scale(n0, 3);
  var x7 = (c6 + a) % 5;
  a = (c6 + a) % 4;
  x7 = x7 * 1;
  var g8 = box.count;
  var f9 = 4.4;
  c6 = c2;
  var p10 = n0 * 2 < (x3 + c2) % 6;
  if (p10) {
    x3 = x3;
  } else {
    x7 = (g8 + c2) % 8;
  }
  var x11 = g8 * 2;
  g8 = (c6 + s5) % 7;
  var g12 = box.count;
  var r13 = query("get t1 k=? n", 7 % 3);
  var s14 = 0;
  if (len(r13) > 0) {
    s14 = r13[0];
  }
  print("out", a, b, n0, f1, c2, x3, s5, c6, x7, g8, f9, x11, g12, s14);
  print("box", box.count, box.amount);
}

entry main;
