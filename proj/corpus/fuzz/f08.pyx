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
  var n0 = (b + a) % 5;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[7];
  var q2 = lookup(b * 2);
  var r3 = query("get t1 k=? n", n0 + 6 % 3);
  var s4 = 0;
  if (len(r3) > 0) {
    s4 = r3[0];
  }
  exec("update t0 k=? v=?", s4 + 6 % 5, q2 * 2.5);
  var x5 = a;
  var f6 = q2;
  var p7 = (a + x5) % 8 < 6;
  if (p7) {
    a = (b + b) % 8;
  }
  var q8 = lookup(b);
  var i9 = 0;
  while (i9 < 5) {
    arr1[i9 % 7] = q8 * 3.5;
    bump(box, i9 % 3);
    i9 = i9 + 1;
  }
  box.count = box.count + 12;
  var p10 = (a + x5) % 8 < 18;
  if (p10) {
    x5 = a + 3;
  }
  exec("update t0 k=? v=?", (a + s4) % 8 % 5, f6 * 0.5);
  var q11 = lookup(17);
  var c12 = scale((s4 + x5) % 6, 3);
  var i13 = 0;
  while (i13 < 6) {
    arr1[i13 % 7] = 6.3;
    bump(box, i13 % 3);
    i13 = i13 + 1;
  }
  var f14 = 9.5;
  var c15 = scale((x5 + n0) % 6, 1);
  var p16 = 3 < 7;
  if (p16) {
    s4 = s4 * 4;
  } else {
    a = (x5 + c15) % 6;
  }
  var q17 = lookup(x5 + 2);
  var p18 = c15 < c12 * 4;
  if (p18) {
    b = (x5 + c15) % 3;
  }
  var x19 = (c15 + s4) % 3;
  var c20 = scale(18, 3);
  var x21 = a + 7;
  print("out", a, b, n0, q2, s4, x5, f6, q8, q11, c12, f14, c15, q17, x19, c20, x21);
  print("box", box.count, box.amount);
}

entry main;
