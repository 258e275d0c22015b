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
  var n0 = a + 8;
  var box = new Box();
  box.count = a % 7;
  var p1 = a + 1 < (n0 + a) % 6;
  if (p1) {
    a = b * 1;
  } else {
    n0 = (a + a) % 2;
  }
  exec("insert t1", b % 100, b);
  var g2 = box.count;
  var r3 = query("get t1 k=? n", a + 1 % 3);
  var s4 = 0;
  if (len(r3) > 0) {
    s4 = r3[0];
  }
  var x5 = a;
  var r6 = query("get t1 k=? n", (n0 + x5) % 6 % 3);
  var s7 = 0;
  if (len(r6) > 0) {
    s7 = r6[0];
  }
  var c8 = scale(x5 * 1, 3);
  var r9 = query("get t1 k=? n", n0 * 3 % 3);
  var s10 = 0;
  if (len(r9) > 0) {
    s10 = r9[0];
  }
  a = s4 + 6;
  box.count = box.count + 5;
  var r11 = query("get t1 k=? n", s7 * 4 % 3);
  var s12 = 0;
  if (len(r11) > 0) {
    s12 = r11[0];
  }
  exec("insert t1", a * 4 % 100, s12 + 6);
  s10 = a;
  var g13 = box.count;
  var r14 = query("get t1 k=? n", (s7 + g2) % 8 % 3);
  var s15 = 0;
  if (len(r14) > 0) {
    s15 = r14[0];
  }
  s4 = s15;
  var r16 = query("get t1 k=? n", n0 % 3);
  var s17 = 0;
  if (len(r16) > 0) {
    s17 = r16[0];
  }
  var r18 = query("get t1 k=? n", g2 % 3);
  var s19 = 0;
  if (len(r18) > 0) {
    s19 = r18[0];
  }
  exec("insert t1", (s10 + s15) % 4 % 100, s10 + 8);
  var p20 = s15 < a + 5;
  if (p20) {
    n0 = 18;
  } else {
    s4 = g13 + 4;
  }
  var g21 = box.count;
  print("out", a, b, n0, g2, s4, x5, s7, c8, s10, s12, g13, s15, s17, s19, g21);
  print("box", box.count, box.amount);
}

entry main;
