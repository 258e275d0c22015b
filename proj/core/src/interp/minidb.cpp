#include "pyx/interp.hpp"

#include <sstream>

namespace pyx {

int Table::col_index(const std::string &name) const {
  for (size_t i = 0; i < cols.size(); ++i)
    if (cols[i].first == name)
      return static_cast<int>(i);
  return -1;
}

unsigned QueryTemplate::arg_count() const {
  switch (op) {
  case Op::Get: return 1;
  case Op::Scan: return 2;
  case Op::Insert: return 0; // row width, checked against the table
  case Op::Update: return 2;
  }
  return 0;
}

QueryTemplate parse_query_template(const std::string &text) {
  auto parts = split_ws(text);
  auto fail = [&](const std::string &why) -> QueryTemplate {
    throw Diag("query", "bad query template '" + text + "': " + why);
  };
  if (parts.empty())
    return fail("empty");
  QueryTemplate q;
  const std::string &op = parts[0];
  auto key_eq = [&](const std::string &tok, const char *suffix) {
    size_t n = std::string(suffix).size();
    if (tok.size() <= n || tok.substr(tok.size() - n) != suffix)
      fail("expected column" + std::string(suffix));
    return tok.substr(0, tok.size() - n);
  };
  if (op == "get") {
    if (parts.size() != 4)
      return fail("want: get TABLE KEY=? COL");
    q.op = QueryTemplate::Op::Get;
    q.table = parts[1];
    q.key_col = key_eq(parts[2], "=?");
    q.result_col = parts[3];
  } else if (op == "scan") {
    if (parts.size() != 4)
      return fail("want: scan TABLE KEY=?..? COL");
    q.op = QueryTemplate::Op::Scan;
    q.table = parts[1];
    q.key_col = key_eq(parts[2], "=?..?");
    q.result_col = parts[3];
  } else if (op == "insert") {
    if (parts.size() != 2)
      return fail("want: insert TABLE");
    q.op = QueryTemplate::Op::Insert;
    q.table = parts[1];
  } else if (op == "update") {
    if (parts.size() != 4)
      return fail("want: update TABLE KEY=? COL=?");
    q.op = QueryTemplate::Op::Update;
    q.table = parts[1];
    q.key_col = key_eq(parts[2], "=?");
    q.set_col = key_eq(parts[3], "=?");
  } else {
    return fail("unknown op '" + op + "'");
  }
  return q;
}

namespace {

bool value_eq(const Value &a, const Value &b) {
  if (a.index() == b.index())
    return a == b;
  // int/float comparisons coerce, matching the interpreter
  const int64_t *ia = std::get_if<int64_t>(&a);
  const int64_t *ib = std::get_if<int64_t>(&b);
  const double *da = std::get_if<double>(&a);
  const double *db = std::get_if<double>(&b);
  if (ia && db)
    return static_cast<double>(*ia) == *db;
  if (da && ib)
    return *da == static_cast<double>(*ib);
  return false;
}

bool value_le(const Value &a, const Value &b) {
  auto as_double = [](const Value &v) -> std::optional<double> {
    if (const int64_t *i = std::get_if<int64_t>(&v))
      return static_cast<double>(*i);
    if (const double *d = std::get_if<double>(&v))
      return *d;
    return std::nullopt;
  };
  auto da = as_double(a), db = as_double(b);
  if (da && db)
    return *da <= *db;
  const std::string *sa = std::get_if<std::string>(&a);
  const std::string *sb = std::get_if<std::string>(&b);
  if (sa && sb)
    return *sa <= *sb;
  throw Diag("query", "range scan keys must be numeric or string");
}

Value coerce(const Value &v, ValueKind want) {
  if (kind_of(v) == want)
    return v;
  if (want == ValueKind::Float) {
    if (const int64_t *i = std::get_if<int64_t>(&v))
      return static_cast<double>(*i);
  }
  throw Diag("query", "value kind mismatch: got " +
                          std::string(value_kind_name(kind_of(v))) + ", want " +
                          value_kind_name(want));
}

} // namespace

std::optional<std::vector<Value>> MiniDb::run(const QueryTemplate &q,
                                              const std::vector<Value> &args,
                                              ValueKind *result_kind,
                                              std::vector<size_t> *touched) {
  auto it = tables.find(q.table);
  if (it == tables.end())
    throw Diag("query", "unknown table '" + q.table + "'");
  Table &t = it->second;

  auto col = [&](const std::string &name) {
    int idx = t.col_index(name);
    if (idx < 0)
      throw Diag("query", "unknown column '" + name + "' in table " + q.table);
    return static_cast<size_t>(idx);
  };

  switch (q.op) {
  case QueryTemplate::Op::Get: {
    if (args.size() != 1)
      throw Diag("query", "get takes 1 argument");
    size_t k = col(q.key_col), r = col(q.result_col);
    std::vector<Value> out;
    for (size_t i = 0; i < t.rows.size(); ++i)
      if (value_eq(t.rows[i][k], args[0])) {
        out.push_back(t.rows[i][r]);
        if (touched)
          touched->push_back(i);
      }
    if (result_kind)
      *result_kind = t.cols[r].second;
    return out;
  }
  case QueryTemplate::Op::Scan: {
    if (args.size() != 2)
      throw Diag("query", "scan takes 2 arguments");
    size_t k = col(q.key_col), r = col(q.result_col);
    std::vector<Value> out;
    for (size_t i = 0; i < t.rows.size(); ++i)
      if (value_le(args[0], t.rows[i][k]) && value_le(t.rows[i][k], args[1])) {
        out.push_back(t.rows[i][r]);
        if (touched)
          touched->push_back(i);
      }
    if (result_kind)
      *result_kind = t.cols[r].second;
    return out;
  }
  case QueryTemplate::Op::Insert: {
    if (args.size() != t.cols.size())
      throw Diag("query", "insert into " + q.table + " takes " +
                              std::to_string(t.cols.size()) + " values, got " +
                              std::to_string(args.size()));
    std::vector<Value> row;
    for (size_t i = 0; i < args.size(); ++i)
      row.push_back(coerce(args[i], t.cols[i].second));
    if (touched)
      touched->push_back(t.rows.size());
    t.rows.push_back(std::move(row));
    return std::nullopt;
  }
  case QueryTemplate::Op::Update: {
    if (args.size() != 2)
      throw Diag("query", "update takes 2 arguments");
    size_t k = col(q.key_col), s = col(q.set_col);
    Value v = coerce(args[1], t.cols[s].second);
    for (size_t i = 0; i < t.rows.size(); ++i)
      if (value_eq(t.rows[i][k], args[0])) {
        t.rows[i][s] = v;
        if (touched)
          touched->push_back(i);
      }
    return std::nullopt;
  }
  }
  throw Diag("internal", "unreachable query op");
}

std::string MiniDb::dump() const {
  std::ostringstream os;
  for (const auto &[name, t] : tables) {
    os << "table " << name << '\n' << "cols";
    for (const auto &[cn, ck] : t.cols)
      os << ' ' << cn << ':' << value_kind_name(ck);
    os << '\n';
    for (const auto &row : t.rows) {
      os << "row";
      for (const auto &v : row)
        os << ' ' << value_to_text(v);
      os << '\n';
    }
  }
  return os.str();
}

} // namespace pyx
