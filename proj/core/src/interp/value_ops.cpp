#include "pyx/interp.hpp"

// Value semantics shared by the reference interpreter and the distributed
// block engine. Integers wrap at 64 bits (computed through unsigned
// arithmetic), floats are IEEE doubles, and stores coerce int into float
// slots. Keeping one implementation is what makes distributed runs
// bit-comparable with the reference.

namespace pyx {

namespace {

int64_t wrap_add(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) + static_cast<uint64_t>(b));
}
int64_t wrap_sub(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) - static_cast<uint64_t>(b));
}
int64_t wrap_mul(int64_t a, int64_t b) {
  return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b));
}

bool both_numeric(const Value &a, const Value &b) {
  auto num = [](const Value &v) {
    return std::holds_alternative<int64_t>(v) || std::holds_alternative<double>(v);
  };
  return num(a) && num(b);
}

double to_double(const Value &v) {
  if (const int64_t *i = std::get_if<int64_t>(&v))
    return static_cast<double>(*i);
  return std::get<double>(v);
}

} // namespace

bool value_truthy(const Value &v) {
  if (const bool *b = std::get_if<bool>(&v))
    return *b;
  throw Diag("runtime", "condition is not a bool");
}

Value eval_binary(BinOp op, const Value &a, const Value &b) {
  switch (op) {
  case BinOp::Add:
    if (std::holds_alternative<std::string>(a) && std::holds_alternative<std::string>(b))
      return std::get<std::string>(a) + std::get<std::string>(b);
    [[fallthrough]];
  case BinOp::Sub:
  case BinOp::Mul:
  case BinOp::Div: {
    if (!both_numeric(a, b))
      throw Diag("runtime", "arithmetic on non-numeric values");
    if (std::holds_alternative<int64_t>(a) && std::holds_alternative<int64_t>(b)) {
      int64_t x = std::get<int64_t>(a), y = std::get<int64_t>(b);
      switch (op) {
      case BinOp::Add: return wrap_add(x, y);
      case BinOp::Sub: return wrap_sub(x, y);
      case BinOp::Mul: return wrap_mul(x, y);
      default:
        if (y == 0)
          throw Diag("runtime", "integer division by zero");
        if (x == INT64_MIN && y == -1)
          return INT64_MIN;
        return x / y;
      }
    }
    double x = to_double(a), y = to_double(b);
    switch (op) {
    case BinOp::Add: return x + y;
    case BinOp::Sub: return x - y;
    case BinOp::Mul: return x * y;
    default: return x / y;
    }
  }
  case BinOp::Mod: {
    const int64_t *x = std::get_if<int64_t>(&a);
    const int64_t *y = std::get_if<int64_t>(&b);
    if (!x || !y)
      throw Diag("runtime", "'%' takes integers");
    if (*y == 0)
      throw Diag("runtime", "integer modulo by zero");
    if (*x == INT64_MIN && *y == -1)
      return int64_t{0};
    return *x % *y;
  }
  case BinOp::Eq:
  case BinOp::Ne: {
    bool eq;
    if (both_numeric(a, b) && a.index() != b.index())
      eq = to_double(a) == to_double(b);
    else if (a.index() == b.index())
      eq = a == b;
    else
      throw Diag("runtime", "comparison of incompatible kinds");
    return op == BinOp::Eq ? eq : !eq;
  }
  case BinOp::Lt:
  case BinOp::Le:
  case BinOp::Gt:
  case BinOp::Ge: {
    int c;
    if (both_numeric(a, b)) {
      double x = to_double(a), y = to_double(b);
      c = x < y ? -1 : x > y ? 1 : 0;
    } else if (std::holds_alternative<std::string>(a) &&
               std::holds_alternative<std::string>(b)) {
      const auto &x = std::get<std::string>(a);
      const auto &y = std::get<std::string>(b);
      c = x < y ? -1 : x > y ? 1 : 0;
    } else {
      throw Diag("runtime", "ordering comparison on non-numeric, non-string values");
    }
    switch (op) {
    case BinOp::Lt: return c < 0;
    case BinOp::Le: return c <= 0;
    case BinOp::Gt: return c > 0;
    default: return c >= 0;
    }
  }
  case BinOp::And:
  case BinOp::Or:
    throw Diag("internal", "short-circuit operator reached eval_binary");
  }
  throw Diag("internal", "unknown binary operator");
}

Value eval_unary(UnOp op, const Value &v) {
  if (op == UnOp::Not) {
    const bool *b = std::get_if<bool>(&v);
    if (!b)
      throw Diag("runtime", "'!' takes a bool");
    return !*b;
  }
  if (const int64_t *i = std::get_if<int64_t>(&v))
    return wrap_sub(0, *i);
  if (const double *d = std::get_if<double>(&v))
    return -*d;
  throw Diag("runtime", "unary '-' takes a number");
}

Value coerce_store_value(const Value &v, ValueKind want, const std::string &what) {
  ValueKind got = kind_of(v);
  if (got == want)
    return v;
  if (want == ValueKind::Float && got == ValueKind::Int)
    return static_cast<double>(std::get<int64_t>(v));
  if (const Ref *r = std::get_if<Ref>(&v); r && r->id == 0 &&
                                           (want == ValueKind::ObjectRef ||
                                            want == ValueKind::ArrayRef))
    return Ref{want, 0};
  throw Diag("runtime", "type error storing " + std::string(value_kind_name(got)) +
                            " into " + what + " (" + value_kind_name(want) + ")");
}

Value default_value_for(const TypeRef &t) {
  switch (t.kind) {
  case ValueKind::Int: return int64_t{0};
  case ValueKind::Float: return 0.0;
  case ValueKind::Bool: return false;
  case ValueKind::String: return std::string{};
  case ValueKind::ArrayRef: return Ref{ValueKind::ArrayRef, 0};
  case ValueKind::ObjectRef: return Ref{ValueKind::ObjectRef, 0};
  }
  return int64_t{0};
}

Value default_scalar_value(ValueKind k) {
  TypeRef t;
  t.kind = k;
  return default_value_for(t);
}

} // namespace pyx
