#include "pyx/interp.hpp"

#include <sstream>

namespace pyx {

std::string value_to_text(const Value &v) {
  struct Visitor {
    std::string operator()(int64_t i) const { return format_int(i); }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string &s) const { return s; }
    std::string operator()(const Ref &r) const {
      if (r.id == 0)
        return "null";
      std::ostringstream os;
      os << (r.kind == ValueKind::ArrayRef ? "arr@" : "obj@") << r.id;
      return os.str();
    }
  };
  return std::visit(Visitor{}, v);
}

ValueKind kind_of(const Value &v) {
  struct Visitor {
    ValueKind operator()(int64_t) const { return ValueKind::Int; }
    ValueKind operator()(double) const { return ValueKind::Float; }
    ValueKind operator()(bool) const { return ValueKind::Bool; }
    ValueKind operator()(const std::string &) const { return ValueKind::String; }
    ValueKind operator()(const Ref &r) const { return r.kind; }
  };
  return std::visit(Visitor{}, v);
}

uint64_t wire_size(const Value &v, const Heap *heap) {
  struct Visitor {
    const Heap *heap;
    uint64_t operator()(int64_t) const { return 8; }
    uint64_t operator()(double) const { return 8; }
    uint64_t operator()(bool) const { return 1; }
    uint64_t operator()(const std::string &s) const { return 4 + s.size(); }
    uint64_t operator()(const Ref &r) const {
      uint64_t n = 8; // the reference itself
      if (r.kind == ValueKind::ArrayRef && r.id != 0 && heap) {
        if (const ArrayObj *a = heap->array_if(r.id)) {
          n += 5; // element kind byte + length
          for (const auto &e : a->data)
            n += wire_size(e, nullptr); // scalar elements only
        }
      }
      return n;
    }
  };
  return std::visit(Visitor{heap}, v);
}

ArrayObj &Heap::array(uint64_t id) {
  auto it = arrays.find(id);
  if (it == arrays.end())
    throw Diag("runtime", "unknown array id " + std::to_string(id));
  return it->second;
}

const ArrayObj *Heap::array_if(uint64_t id) const {
  auto it = arrays.find(id);
  return it == arrays.end() ? nullptr : &it->second;
}

HeapObject &Heap::object(uint64_t id) {
  auto it = objects.find(id);
  if (it == objects.end())
    throw Diag("runtime", "unknown object id " + std::to_string(id));
  return it->second;
}

uint64_t Profile::count(uint32_t stmt) const {
  auto it = stmt_count.find(stmt);
  if (it == stmt_count.end())
    throw Diag("profile", "no profile entry for statement " + std::to_string(stmt));
  return it->second;
}

std::string Profile::serialize() const {
  std::ostringstream os;
  os << "pyxprofile v1\n";
  for (const auto &[id, cnt] : stmt_count) {
    os << "stmt " << id << ' ' << cnt;
    auto it = def_size.find(id);
    if (it != def_size.end())
      os << ' ' << it->second.total << '/' << it->second.samples;
    os << '\n';
  }
  return os.str();
}

Profile Profile::deserialize(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "pyxprofile v1")
    throw Diag("format", "bad profile header");
  Profile p;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    auto parts = split_ws(line);
    if (parts.size() < 3 || parts[0] != "stmt")
      throw Diag("format", "bad profile line: " + line);
    uint32_t id = static_cast<uint32_t>(std::stoul(parts[1]));
    p.stmt_count[id] = std::stoull(parts[2]);
    if (parts.size() >= 4) {
      auto slash = parts[3].find('/');
      if (slash == std::string::npos)
        throw Diag("format", "bad size field: " + parts[3]);
      SizeStat s;
      s.total = std::stoull(parts[3].substr(0, slash));
      s.samples = std::stoull(parts[3].substr(slash + 1));
      p.def_size[id] = s;
    }
  }
  return p;
}

std::string OutputTrace::text() const {
  std::ostringstream os;
  os << "-- output --\n";
  for (const auto &l : prints)
    os << l << '\n';
  os << "-- db --\n" << final_db;
  return os.str();
}

} // namespace pyx
