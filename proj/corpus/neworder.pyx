// New-order style benchmark: fetch an order's item costs, apply a discount
// per item, record line items, then settle the customer's account.

class Order {
  int id;
  float[] realCosts;
  float totalCost;
}

fn getCosts(o) {
  var cs = query("get items order_id=? cost", o.id);
  return cs;
}

fn insertNewLineItem(oid, realCost) {
  exec("insert lineitems", oid, realCost);
}

fn updateAccount(cid, total) {
  var bal = query("get accounts id=? balance", cid);
  var b = bal[0];
  exec("update accounts id=? balance=?", cid, b - total);
}

fn computeTotalCost(o, dct) {
  var i = 0;
  var costs = getCosts(o);
  o.realCosts = new float[len(costs)];
  for (itemCost : costs) {
    var realCost = itemCost * dct;
    o.totalCost += realCost;
    o.realCosts[i++] = realCost;
    insertNewLineItem(o.id, realCost);
  }
}

fn placeOrder(oid, cid, dct) {
  var o = new Order();
  o.id = oid;
  o.totalCost = 0.0;
  computeTotalCost(o, dct);
  updateAccount(cid, o.totalCost);
  print("order", oid, "total", o.totalCost);
}

entry placeOrder;
