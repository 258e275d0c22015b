// Linked-list build and traversal, kept on one host: measures the execution
// block machinery against the plain tree-walking interpreter.

class Node {
  int val;
  Node next;
}

fn build(n) {
  var head = null;
  var i = 0;
  while (i < n) {
    var node = new Node();
    node.val = i;
    node.next = head;
    head = node;
    i = i + 1;
  }
  return head;
}

fn sumList(head) {
  var s = 0;
  var cur = head;
  while (cur != null) {
    s = s + cur.val;
    cur = cur.next;
  }
  return s;
}

fn main(n) {
  var h = build(n);
  var s = sumList(h);
  print("sum", s);
}

entry main;
