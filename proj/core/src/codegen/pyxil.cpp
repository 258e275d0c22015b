#include "pyx/codegen.hpp"

#include <sstream>

// PyxIL text: the normalized program with a :APP:/:DB: label on every field
// declaration and statement, send markers interleaved, and locals declared
// unlabeled. Grammar in docs/pyxil.md; a parser in the test suite round-trips
// this format.

namespace pyx {

namespace {

class Emitter {
public:
  explicit Emitter(const PyxilProgram &px) : px_(px) {}

  std::string run() {
    for (const auto &c : px_.program.classes) {
      os_ << "class " << c.name << " {\n";
      for (const auto &f : c.fields) {
        int idx = field_index(px_.program, c.name, f.name);
        Host h = px_.field_host.count(idx) ? px_.field_host.at(idx) : Host::App;
        os_ << "  " << label(h) << ' ' << f.type.str() << ' ' << f.name << ";\n";
      }
      os_ << "}\n";
    }
    for (const auto &f : px_.program.functions) {
      os_ << "fn " << f.name << '(';
      for (size_t i = 0; i < f.params.size(); ++i)
        os_ << (i ? ", " : "") << f.params[i];
      os_ << ") {\n";
      if (!f.locals.empty()) {
        os_ << "  var";
        for (size_t i = 0; i < f.locals.size(); ++i)
          os_ << (i ? ", " : " ") << f.locals[i];
        os_ << ";\n";
      }
      emit_body(f.body, 1);
      os_ << "}\n";
    }
    for (const auto &e : px_.program.entry_points)
      os_ << "entry " << e.func << ";\n";
    return os_.str();
  }

private:
  const PyxilProgram &px_;
  std::ostringstream os_;

  static const char *label(Host h) { return h == Host::App ? ":APP:" : ":DB:"; }

  std::string pad(int depth) const { return std::string(static_cast<size_t>(depth) * 2, ' '); }

  void emit_sync(uint32_t stmt, Host host, int depth) {
    auto it = px_.sync_after.find(stmt);
    if (it == px_.sync_after.end())
      return;
    for (const auto &op : it->second) {
      const char *fn = op.kind == SyncOp::Kind::SendApp    ? "sendAPP"
                       : op.kind == SyncOp::Kind::SendDb   ? "sendDB"
                                                           : "sendNative";
      os_ << pad(depth) << label(host) << ' ' << fn << '(' << op.var << ");\n";
    }
  }

  void emit_body(const std::vector<StmtPtr> &body, int depth) {
    for (const auto &sp : body)
      emit_stmt(*sp, depth);
  }

  void emit_stmt(const Stmt &s, int depth) {
    Host h = px_.host_of(s);
    switch (s.kind) {
    case Stmt::Kind::Assign:
      os_ << pad(depth) << label(h) << ' ' << expr_text(*s.lhs) << " = "
          << expr_text(*s.expr) << ";\n";
      break;
    case Stmt::Kind::ExprStmt:
      os_ << pad(depth) << label(h) << ' ' << expr_text(*s.expr) << ";\n";
      break;
    case Stmt::Kind::Print: {
      os_ << pad(depth) << label(h) << " print(";
      for (size_t i = 0; i < s.args.size(); ++i)
        os_ << (i ? ", " : "") << expr_text(*s.args[i]);
      os_ << ");\n";
      break;
    }
    case Stmt::Kind::Return:
      os_ << pad(depth) << label(h) << " return";
      if (s.expr)
        os_ << ' ' << expr_text(*s.expr);
      os_ << ";\n";
      break;
    case Stmt::Kind::If:
      os_ << pad(depth) << label(h) << " if (" << expr_text(*s.expr) << ") {\n";
      emit_body(s.body, depth + 1);
      if (!s.else_body.empty()) {
        os_ << pad(depth) << "} else {\n";
        emit_body(s.else_body, depth + 1);
      }
      os_ << pad(depth) << "}\n";
      break;
    case Stmt::Kind::While:
      os_ << pad(depth) << label(h) << " while (" << expr_text(*s.expr) << ") {\n";
      if (!s.cond_prelude.empty()) {
        os_ << pad(depth + 1) << "cond:\n";
        emit_body(s.cond_prelude, depth + 2);
      }
      os_ << pad(depth + 1) << "do:\n";
      emit_body(s.body, depth + 2);
      os_ << pad(depth) << "}\n";
      break;
    default:
      throw Diag("internal", "non-normalized statement in PyxIL emission")
          .at_stmt(s.id);
    }
    emit_sync(s.id, h, depth);
  }
};

} // namespace

std::string emit_pyxil_text(const PyxilProgram &px) { return Emitter(px).run(); }

} // namespace pyx
