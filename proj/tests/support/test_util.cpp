#include "test_util.hpp"

namespace pyxtest {

std::string corpus_path(const std::string &name) {
  return std::string(PYX_CORPUS_DIR) + "/" + name;
}

std::string read_corpus(const std::string &name) {
  return pyx::read_file(corpus_path(name));
}

pyx::Program load_program(const std::string &name) {
  return pyx::normalize(pyx::parse(read_corpus(name), name));
}

pyx::Workload load_workload(const std::string &name) {
  return pyx::parse_workload(read_corpus(name), name);
}

const pyx::Stmt *find_stmt(const pyx::Program &p, const std::string &func,
                           pyx::NormKind kind, size_t skip) {
  const pyx::FuncDecl *f = p.find_function(func);
  if (!f)
    return nullptr;
  const pyx::Stmt *found = nullptr;
  size_t seen = 0;
  pyx::for_each_stmt(f->body, [&](const pyx::Stmt &s) {
    if (found)
      return;
    if (pyx::norm_kind(s) == kind) {
      if (seen++ == skip)
        found = &s;
    }
  });
  return found;
}

} // namespace pyxtest
