// Three-phase microbenchmark: a batch of key lookups, a compute-heavy
// mixing loop, then a batch of counter updates. Each budget regime favors a
// different split.

fn readPhase(n) {
  var sum = 0.0;
  var i = 0;
  while (i < n) {
    var r = query("get items k=? v", i % 10);
    if (len(r) > 0) {
      sum = sum + r[0];
    }
    i = i + 1;
  }
  return sum;
}

fn computePhase(n) {
  var h = 1469598103;
  var i = 0;
  while (i < n) {
    h = h * 1099511 + i;
    h = h % 1000000007;
    i = i + 1;
  }
  return h;
}

fn writePhase(n, h) {
  var i = 0;
  while (i < n) {
    exec("update counters k=? v=?", i % 10, h + i);
    i = i + 1;
  }
}

fn main(reads, work, writes) {
  var s = readPhase(reads);
  var h = computePhase(work);
  writePhase(writes, h);
  print("checksum", s, h);
}

entry main;
