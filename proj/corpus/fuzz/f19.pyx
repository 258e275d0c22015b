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
  var n0 = 16;
  var box = new Box();
  box.count = a % 7;
  var arr1 = new float[4];
  var r2 = query("get t1 k=? n", n0 * 2 % 3);
  var s3 = 0;
  if (len(r2) > 0) {
    s3 = r2[0];
  }
  b = a + 5;
  var f4 = 1.5 * 0.5;
  var x5 = 13;
  var x6 = s3 * 1;
  x6 = (n0 + b) % 3;
  var c7 = scale(x6, 3);
  var g8 = box.count;
  var g9 = box.count;
  var i10 = 0;
  while (i10 < 6) {
    arr1[i10 % 4] = f4;
    bump(box, i10 % 3);
    i10 = i10 + 1;
  }
  var p11 = 12 < s3;
  if (p11) {
    s3 = 9;
  } else {
    x6 = x5 + 0;
  }
  var x12 = g9 + 5;
  exec("insert t1", x5 + 8 % 100, x6 + 5);
  var r13 = query("get t1 k=? n", b + 0 % 3);
  var s14 = 0;
  if (len(r13) > 0) {
    s14 = r13[0];
  }
  var f15 = 9.2;
  var r16 = query("get t1 k=? n", g8 + 5 % 3);
  var s17 = 0;
  if (len(r16) > 0) {
    s17 = r16[0];
  }
  print("out", a, b, n0, s3, f4, x5, x6, c7, g8, g9, x12, s14, f15, s17);
  print("box", box.count, box.amount);
}

entry main;
