#include "pyx/interp.hpp"

#include <charconv>
#include <sstream>

// Workload file format (one document):
//
//   workload v1
//   seed 42
//   table items
//   cols order_id:int cost:float
//   row 1 2.0
//   row 1 4.0
//   end
//   call placeOrder 1 0.5
//
// Literals: integers, floats (with '.' or exponent), true/false, and
// double-quoted strings.

namespace pyx {

namespace {

Value parse_literal(const std::string &tok, const std::string &ctx) {
  if (tok == "true")
    return true;
  if (tok == "false")
    return false;
  if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"')
    return tok.substr(1, tok.size() - 2);
  if (tok.find_first_of(".eE") != std::string::npos && tok.find_first_not_of("+-0123456789.eE") == std::string::npos) {
    try {
      return std::stod(tok);
    } catch (...) {
    }
  }
  int64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec == std::errc{} && res.ptr == tok.data() + tok.size())
    return v;
  try {
    return std::stod(tok);
  } catch (...) {
    throw Diag("format", "bad literal '" + tok + "' in " + ctx);
  }
}

ValueKind parse_kind(const std::string &name, const std::string &ctx) {
  if (name == "int")
    return ValueKind::Int;
  if (name == "float")
    return ValueKind::Float;
  if (name == "bool")
    return ValueKind::Bool;
  if (name == "string")
    return ValueKind::String;
  throw Diag("format", "bad column kind '" + name + "' in " + ctx);
}

// split respecting double-quoted strings
std::vector<std::string> split_tokens(const std::string &line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    if (i >= line.size())
      break;
    if (line[i] == '"') {
      size_t j = i + 1;
      while (j < line.size() && line[j] != '"')
        ++j;
      if (j >= line.size())
        throw Diag("format", "unterminated string in workload line: " + line);
      out.push_back(line.substr(i, j - i + 1));
      i = j + 1;
    } else {
      size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t')
        ++j;
      out.push_back(line.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

} // namespace

Workload parse_workload(const std::string &text, const std::string &filename) {
  std::istringstream in(text);
  std::string line;
  uint32_t lineno = 0;
  auto next_line = [&](std::string &out) {
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos)
        line = line.substr(0, hash);
      auto toks = split_tokens(line);
      if (toks.empty())
        continue;
      out = line;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string &msg) -> Workload {
    throw Diag("format", msg, SourceLoc{filename, lineno, 1});
  };

  std::string l;
  if (!next_line(l) || split_tokens(l)[0] != "workload")
    return fail("expected 'workload v1' header");

  Workload w;
  while (next_line(l)) {
    auto toks = split_tokens(l);
    if (toks[0] == "seed") {
      if (toks.size() != 2)
        return fail("seed takes one value");
      w.seed = std::stoull(toks[1]);
    } else if (toks[0] == "table") {
      if (toks.size() != 2)
        return fail("table takes a name");
      std::string name = toks[1];
      if (w.db_init.tables.count(name))
        return fail("table '" + name + "' declared twice");
      Table t;
      if (!next_line(l))
        return fail("table without cols");
      auto cols = split_tokens(l);
      if (cols[0] != "cols")
        return fail("expected 'cols' after table");
      for (size_t i = 1; i < cols.size(); ++i) {
        auto colon = cols[i].find(':');
        if (colon == std::string::npos)
          return fail("column needs name:kind");
        t.cols.emplace_back(cols[i].substr(0, colon),
                            parse_kind(cols[i].substr(colon + 1), "table " + name));
      }
      while (next_line(l)) {
        auto row_toks = split_tokens(l);
        if (row_toks[0] == "end")
          break;
        if (row_toks[0] != "row")
          return fail("expected 'row' or 'end'");
        if (row_toks.size() - 1 != t.cols.size())
          return fail("row width mismatch in table " + name);
        std::vector<Value> row;
        for (size_t i = 1; i < row_toks.size(); ++i) {
          Value v = parse_literal(row_toks[i], "table " + name);
          if (kind_of(v) == ValueKind::Int && t.cols[i - 1].second == ValueKind::Float)
            v = static_cast<double>(std::get<int64_t>(v));
          if (kind_of(v) != t.cols[i - 1].second)
            return fail("row value kind mismatch in table " + name);
          row.push_back(std::move(v));
        }
        t.rows.push_back(std::move(row));
      }
      w.db_init.tables[name] = std::move(t);
    } else if (toks[0] == "call") {
      if (toks.size() < 2)
        return fail("call takes an entry point name");
      WorkloadCall c;
      c.entry = toks[1];
      for (size_t i = 2; i < toks.size(); ++i)
        c.args.push_back(parse_literal(toks[i], "call " + c.entry));
      w.calls.push_back(std::move(c));
    } else {
      return fail("unknown directive '" + toks[0] + "'");
    }
  }
  return w;
}

std::string dump_workload(const Workload &w) {
  std::ostringstream os;
  os << "workload v1\n";
  os << "seed " << w.seed << '\n';
  for (const auto &[name, t] : w.db_init.tables) {
    os << "table " << name << "\ncols";
    for (const auto &[cn, ck] : t.cols)
      os << ' ' << cn << ':' << value_kind_name(ck);
    os << '\n';
    for (const auto &row : t.rows) {
      os << "row";
      for (const auto &v : row) {
        if (kind_of(v) == ValueKind::String)
          os << " \"" << value_to_text(v) << '"';
        else
          os << ' ' << value_to_text(v);
      }
      os << '\n';
    }
    os << "end\n";
  }
  for (const auto &c : w.calls) {
    os << "call " << c.entry;
    for (const auto &v : c.args) {
      if (kind_of(v) == ValueKind::String)
        os << " \"" << value_to_text(v) << '"';
      else
        os << ' ' << value_to_text(v);
    }
    os << '\n';
  }
  return os.str();
}

} // namespace pyx
