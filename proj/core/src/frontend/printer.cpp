#include "pyx/frontend.hpp"

#include <sstream>

namespace pyx {

namespace {

void print_expr(std::ostream &os, const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::IntLit: os << e.int_val; break;
  case Expr::Kind::FloatLit: os << format_double(e.float_val); break;
  case Expr::Kind::BoolLit: os << (e.bool_val ? "true" : "false"); break;
  case Expr::Kind::StringLit: os << '"' << e.str_val << '"'; break;
  case Expr::Kind::NullLit: os << "null"; break;
  case Expr::Kind::Var: os << e.name; break;
  case Expr::Kind::Field:
    print_expr(os, *e.a);
    os << '.' << e.name;
    break;
  case Expr::Kind::Index:
    print_expr(os, *e.a);
    os << '[';
    print_expr(os, *e.b);
    os << ']';
    break;
  case Expr::Kind::Len:
    os << "len(";
    print_expr(os, *e.a);
    os << ')';
    break;
  case Expr::Kind::Call:
  case Expr::Kind::Query: {
    if (e.kind == Expr::Kind::Call)
      os << e.name << '(';
    else
      os << (e.is_exec ? "exec(\"" : "query(\"") << e.str_val << '"'
         << (e.args.empty() ? "" : ", ");
    for (size_t i = 0; i < e.args.size(); ++i) {
      if (i)
        os << ", ";
      print_expr(os, *e.args[i]);
    }
    os << ')';
    break;
  }
  case Expr::Kind::NewObject:
    os << "new " << e.name << "()";
    break;
  case Expr::Kind::NewArray:
    os << "new " << value_kind_name(e.elem_kind) << '[';
    print_expr(os, *e.a);
    os << ']';
    break;
  case Expr::Kind::Binary:
    os << '(';
    print_expr(os, *e.a);
    os << ' ' << binop_name(e.bin) << ' ';
    print_expr(os, *e.b);
    os << ')';
    break;
  case Expr::Kind::Unary:
    os << unop_name(e.un);
    print_expr(os, *e.a);
    break;
  case Expr::Kind::PostIncDec:
    os << e.name << (e.inc_delta > 0 ? "++" : "--");
    break;
  }
}

void print_body(std::ostream &os, const std::vector<StmtPtr> &body, int indent);

void print_stmt(std::ostream &os, const Stmt &s, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  os << pad << '[' << s.id << "] ";
  switch (s.kind) {
  case Stmt::Kind::VarDecl:
    os << "var " << s.name;
    if (s.expr) {
      os << " = ";
      print_expr(os, *s.expr);
    }
    os << '\n';
    break;
  case Stmt::Kind::Assign:
    print_expr(os, *s.lhs);
    if (s.is_compound)
      os << ' ' << binop_name(s.compound_op) << "= ";
    else
      os << " = ";
    print_expr(os, *s.expr);
    os << '\n';
    break;
  case Stmt::Kind::ExprStmt:
    print_expr(os, *s.expr);
    os << '\n';
    break;
  case Stmt::Kind::If:
    os << "if ";
    print_expr(os, *s.expr);
    os << '\n';
    print_body(os, s.body, indent + 1);
    if (!s.else_body.empty()) {
      os << pad << "else\n";
      print_body(os, s.else_body, indent + 1);
    }
    break;
  case Stmt::Kind::While:
    os << "while ";
    print_expr(os, *s.expr);
    os << '\n';
    if (!s.cond_prelude.empty()) {
      os << pad << "cond:\n";
      print_body(os, s.cond_prelude, indent + 1);
    }
    os << pad << "do:\n";
    print_body(os, s.body, indent + 1);
    break;
  case Stmt::Kind::ForEach:
    os << "for " << s.name << " : ";
    print_expr(os, *s.expr);
    os << '\n';
    print_body(os, s.body, indent + 1);
    break;
  case Stmt::Kind::Return:
    os << "return";
    if (s.expr) {
      os << ' ';
      print_expr(os, *s.expr);
    }
    os << '\n';
    break;
  case Stmt::Kind::Print:
    os << "print ";
    for (size_t i = 0; i < s.args.size(); ++i) {
      if (i)
        os << ", ";
      print_expr(os, *s.args[i]);
    }
    os << '\n';
    break;
  }
}

void print_body(std::ostream &os, const std::vector<StmtPtr> &body, int indent) {
  for (const auto &s : body)
    print_stmt(os, *s, indent);
}

} // namespace

std::string expr_text(const Expr &e) {
  std::ostringstream os;
  print_expr(os, e);
  return os.str();
}

std::string dump_ast(const Program &p) {
  std::ostringstream os;
  for (const auto &c : p.classes) {
    os << "class " << c.name << '\n';
    for (const auto &f : c.fields)
      os << "  field " << f.name << ' ' << f.type.str() << '\n';
  }
  for (const auto &f : p.functions) {
    os << "fn " << f.name << '(';
    for (size_t i = 0; i < f.params.size(); ++i) {
      if (i)
        os << ", ";
      os << f.params[i];
    }
    os << ')';
    if (!f.locals.empty()) {
      os << " locals[";
      for (size_t i = 0; i < f.locals.size(); ++i) {
        if (i)
          os << ' ';
        os << f.locals[i];
      }
      os << ']';
    }
    os << '\n';
    print_body(os, f.body, 1);
  }
  for (const auto &e : p.entry_points)
    os << "entry " << e.func << " [" << e.stmt_id << "]\n";
  return os.str();
}

} // namespace pyx
