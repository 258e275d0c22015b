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
  var n0 = 19;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[6];
  box.count = box.count + 12;
  var p2 = 9 < b;
  if (p2) {
    n0 = (a + n0) % 4;
  }
  var f3 = 1.5 * 0.5;
  var f4 = f3;
  var p5 = (n0 + b) % 4 < a + 6;
  if (p5) {
    a = a;
  } else {
    a = b;
  }
  var i6 = 0;
  while (i6 < 6) {
    arr1[i6 % 6] = f3;
    bump(box, i6 % 3);
    i6 = i6 + 1;
  }
  var p7 = n0 < b + 6;
  if (p7) {
    b = 12;
  } else {
    b = a + 7;
  }
  box.count = box.count + a + 3;
  var x8 = b * 2;
  exec("insert t1", (n0 + n0) % 6 % 100, n0 * 3);
  var q9 = lookup(x8);
  var c10 = scale((a + a) % 3, 3);
  var q11 = lookup(n0);
  var p12 = c10 + 2 < 19;
  if (p12) {
    c10 = 12;
  } else {
    a = c10 * 3;
  }
  exec("insert t1", c10 * 2 % 100, 19);
  box.count = box.count + 15;
  var i13 = 0;
  while (i13 < 6) {
    arr1[i13 % 6] = 7.4;
    bump(box, i13 % 3);
    i13 = i13 + 1;
  }
  var i14 = 0;
  while (i14 < 5) {
    arr1[i14 % 6] = f3 * 3.5;
    i14 = i14 + 1;
  }
  print("out", a, b, n0, f3, f4, x8, q9, c10, q11);
  print("box", box.count, box.amount);
}

entry main;
