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
  var n0 = (b + b) % 4;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[8];
  var f2 = 0.5;
  box.count = box.count + 2;
  var p3 = a + 7 < (b + a) % 4;
  if (p3) {
    n0 = 7;
  } else {
    b = a;
  }
  var c4 = scale(17, 1);
  var c5 = scale(c4 * 3, 1);
  var i6 = 0;
  while (i6 < 5) {
    arr1[i6 % 8] = f2 * 1.5;
    var g7 = box.count;
    i6 = i6 + 1;
  }
  exec("update t0 k=? v=?", 3 % 5, 9.2);
  var q8 = lookup(0);
  var i9 = 0;
  while (i9 < 2) {
    arr1[i9 % 8] = f2 * 3.5;
    i9 = i9 + 1;
  }
  var q10 = lookup(7);
  var r11 = query("get t1 k=? n", c5 + 8 % 3);
  var s12 = 0;
  if (len(r11) > 0) {
    s12 = r11[0];
  }
  exec("insert t1", c4 + 6 % 100, (n0 + s12) % 8);
  var f13 = q10;
  print("out", a, b, n0, f2, c4, c5, q8, q10, s12, f13);
  print("box", box.count, box.amount);
}

entry main;
