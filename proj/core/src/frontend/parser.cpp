#include "pyx/frontend.hpp"

#include "lexer.hpp"

#include <cassert>

namespace pyx {

// ---- AST helpers ----

const char *value_kind_name(ValueKind k) {
  switch (k) {
  case ValueKind::Int: return "int";
  case ValueKind::Float: return "float";
  case ValueKind::Bool: return "bool";
  case ValueKind::String: return "string";
  case ValueKind::ArrayRef: return "array";
  case ValueKind::ObjectRef: return "object";
  }
  return "?";
}

std::string TypeRef::str() const {
  if (kind == ValueKind::ArrayRef)
    return std::string(value_kind_name(elem)) + "[]";
  if (kind == ValueKind::ObjectRef)
    return class_name;
  return value_kind_name(kind);
}

const char *binop_name(BinOp op) {
  switch (op) {
  case BinOp::Add: return "+";
  case BinOp::Sub: return "-";
  case BinOp::Mul: return "*";
  case BinOp::Div: return "/";
  case BinOp::Mod: return "%";
  case BinOp::Eq: return "==";
  case BinOp::Ne: return "!=";
  case BinOp::Lt: return "<";
  case BinOp::Le: return "<=";
  case BinOp::Gt: return ">";
  case BinOp::Ge: return ">=";
  case BinOp::And: return "&&";
  case BinOp::Or: return "||";
  }
  return "?";
}

const char *unop_name(UnOp op) { return op == UnOp::Neg ? "-" : "!"; }

const char *norm_kind_name(NormKind k) {
  switch (k) {
  case NormKind::Assign: return "assign";
  case NormKind::FieldRead: return "field-read";
  case NormKind::FieldWrite: return "field-write";
  case NormKind::ArrayRead: return "array-read";
  case NormKind::ArrayWrite: return "array-write";
  case NormKind::AllocArray: return "alloc-array";
  case NormKind::AllocObject: return "alloc-object";
  case NormKind::Call: return "call";
  case NormKind::Query: return "query";
  case NormKind::Print: return "print";
  case NormKind::IfHead: return "if-head";
  case NormKind::LoopHead: return "loop-head";
  case NormKind::Return: return "return";
  }
  return "?";
}

ExprPtr Expr::clone() const {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->loc = loc;
  e->int_val = int_val;
  e->float_val = float_val;
  e->bool_val = bool_val;
  e->str_val = str_val;
  e->name = name;
  e->elem_kind = elem_kind;
  e->bin = bin;
  e->un = un;
  e->is_exec = is_exec;
  e->inc_delta = inc_delta;
  if (a)
    e->a = a->clone();
  if (b)
    e->b = b->clone();
  for (const auto &arg : args)
    e->args.push_back(arg->clone());
  return e;
}

ExprPtr make_var(const std::string &name, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::Var;
  e->name = name;
  e->loc = std::move(loc);
  return e;
}

ExprPtr make_int(int64_t v, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = Expr::Kind::IntLit;
  e->int_val = v;
  e->loc = std::move(loc);
  return e;
}

StmtPtr Stmt::clone() const {
  auto s = std::make_unique<Stmt>();
  s->kind = kind;
  s->id = id;
  s->loc = loc;
  s->name = name;
  if (lhs)
    s->lhs = lhs->clone();
  if (expr)
    s->expr = expr->clone();
  s->is_compound = is_compound;
  s->compound_op = compound_op;
  for (const auto &st : body)
    s->body.push_back(st->clone());
  for (const auto &st : else_body)
    s->else_body.push_back(st->clone());
  for (const auto &st : cond_prelude)
    s->cond_prelude.push_back(st->clone());
  for (const auto &e : args)
    s->args.push_back(e->clone());
  return s;
}

const FieldDecl *ClassDecl::find_field(const std::string &n) const {
  for (const auto &f : fields)
    if (f.name == n)
      return &f;
  return nullptr;
}

const FuncDecl *Program::find_function(const std::string &name) const {
  for (const auto &f : functions)
    if (f.name == name)
      return &f;
  return nullptr;
}

const ClassDecl *Program::find_class(const std::string &name) const {
  for (const auto &c : classes)
    if (c.name == name)
      return &c;
  return nullptr;
}

const EntryPoint *Program::find_entry(const std::string &name) const {
  for (const auto &e : entry_points)
    if (e.func == name)
      return &e;
  return nullptr;
}

Program Program::clone() const {
  Program p;
  p.next_stmt_id = next_stmt_id;
  p.entry_points = entry_points;
  for (const auto &c : classes)
    p.classes.push_back(ClassDecl{c.name, c.fields, c.loc});
  for (const auto &f : functions) {
    FuncDecl nf;
    nf.name = f.name;
    nf.params = f.params;
    nf.locals = f.locals;
    nf.loc = f.loc;
    for (const auto &s : f.body)
      nf.body.push_back(s->clone());
    p.functions.push_back(std::move(nf));
  }
  return p;
}

void for_each_stmt(const std::vector<StmtPtr> &body,
                   const std::function<void(const Stmt &)> &fn) {
  for (const auto &s : body) {
    fn(*s);
    for_each_stmt(s->cond_prelude, fn);
    for_each_stmt(s->body, fn);
    for_each_stmt(s->else_body, fn);
  }
}

void for_each_stmt_in_program(
    const Program &p, const std::function<void(const FuncDecl &, const Stmt &)> &fn) {
  for (const auto &f : p.functions)
    for_each_stmt(f.body, [&](const Stmt &s) { fn(f, s); });
}

int field_index(const Program &p, const std::string &cls, const std::string &field) {
  int idx = 0;
  for (const auto &c : p.classes) {
    for (const auto &f : c.fields) {
      if (c.name == cls && f.name == field)
        return idx;
      ++idx;
    }
  }
  return -1;
}

std::pair<std::string, std::string> field_by_index(const Program &p, int index) {
  int idx = 0;
  for (const auto &c : p.classes)
    for (const auto &f : c.fields) {
      if (idx == index)
        return {c.name, f.name};
      ++idx;
    }
  throw Diag("internal", "field index out of range");
}

int field_count(const Program &p) {
  int n = 0;
  for (const auto &c : p.classes)
    n += static_cast<int>(c.fields.size());
  return n;
}

// ---- norm_kind ----

namespace {

bool pure_atom_expr(const Expr &e) {
  if (e.is_atom())
    return true;
  if (e.kind == Expr::Kind::Binary)
    return e.bin != BinOp::And && e.bin != BinOp::Or && e.a->is_atom() && e.b->is_atom();
  if (e.kind == Expr::Kind::Unary)
    return e.a->is_atom();
  return false;
}

[[noreturn]] void not_normal(const Stmt &s, const char *why) {
  throw Diag("internal", std::string("statement not in normal form: ") + why)
      .at_stmt(s.id);
}

} // namespace

NormKind norm_kind(const Stmt &s) {
  switch (s.kind) {
  case Stmt::Kind::Print:
    return NormKind::Print;
  case Stmt::Kind::Return:
    return NormKind::Return;
  case Stmt::Kind::If:
    return NormKind::IfHead;
  case Stmt::Kind::While:
    return NormKind::LoopHead;
  case Stmt::Kind::ExprStmt: {
    if (s.expr->kind == Expr::Kind::Call)
      return NormKind::Call;
    if (s.expr->kind == Expr::Kind::Query)
      return NormKind::Query;
    not_normal(s, "expression statement is neither call nor query");
  }
  case Stmt::Kind::Assign: {
    if (s.is_compound)
      not_normal(s, "compound assignment");
    const Expr &lv = *s.lhs;
    const Expr &rhs = *s.expr;
    if (lv.kind == Expr::Kind::Field) {
      if (lv.a->kind != Expr::Kind::Var || !rhs.is_atom())
        not_normal(s, "field write operands");
      return NormKind::FieldWrite;
    }
    if (lv.kind == Expr::Kind::Index) {
      if (lv.a->kind != Expr::Kind::Var || !lv.b->is_atom() || !rhs.is_atom())
        not_normal(s, "array write operands");
      return NormKind::ArrayWrite;
    }
    if (lv.kind != Expr::Kind::Var)
      not_normal(s, "assignment target");
    switch (rhs.kind) {
    case Expr::Kind::Field:
      if (rhs.a->kind != Expr::Kind::Var)
        not_normal(s, "field read base");
      return NormKind::FieldRead;
    case Expr::Kind::Index:
      if (rhs.a->kind != Expr::Kind::Var || !rhs.b->is_atom())
        not_normal(s, "array read operands");
      return NormKind::ArrayRead;
    case Expr::Kind::Len:
      if (rhs.a->kind != Expr::Kind::Var)
        not_normal(s, "len operand");
      return NormKind::ArrayRead; // length read touches the array header
    case Expr::Kind::NewArray:
      if (!rhs.a->is_atom())
        not_normal(s, "array length operand");
      return NormKind::AllocArray;
    case Expr::Kind::NewObject:
      return NormKind::AllocObject;
    case Expr::Kind::Call:
      return NormKind::Call;
    case Expr::Kind::Query:
      return NormKind::Query;
    default:
      if (!pure_atom_expr(rhs))
        not_normal(s, "assignment rhs not flat");
      return NormKind::Assign;
    }
  }
  case Stmt::Kind::VarDecl:
    not_normal(s, "var declaration survives normalize");
  case Stmt::Kind::ForEach:
    not_normal(s, "for-each survives normalize");
  }
  throw Diag("internal", "unreachable statement kind");
}

// ---- parser ----

namespace {

class Parser {
public:
  Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    Program p;
    while (!at(Tok::End)) {
      if (at(Tok::KwClass))
        p.classes.push_back(parse_class());
      else if (at(Tok::KwFn))
        p.functions.push_back(parse_func());
      else if (at(Tok::KwEntry)) {
        expect(Tok::KwEntry);
        Token name = expect(Tok::Ident);
        expect(Tok::Semi);
        EntryPoint ep;
        ep.func = name.text;
        ep.stmt_id = 0; // assigned below, after all function statements
        p.entry_points.push_back(ep);
      } else {
        throw Diag("syntax", "expected 'class', 'fn' or 'entry'", cur().loc);
      }
    }
    p.next_stmt_id = next_id_;
    for (auto &ep : p.entry_points)
      ep.stmt_id = p.next_stmt_id++;
    return p;
  }

private:
  std::vector<Token> toks_;
  size_t i_ = 0;
  uint32_t next_id_ = 1;

  const Token &cur() const { return toks_[i_]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool accept(Tok k) {
    if (!at(k))
      return false;
    ++i_;
    return true;
  }
  Token expect(Tok k) {
    if (!at(k))
      throw Diag("syntax", std::string("unexpected token") +
                               (cur().kind == Tok::End ? " (end of input)" : ""),
                 cur().loc);
    return toks_[i_++];
  }

  StmtPtr new_stmt(Stmt::Kind k, SourceLoc loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = k;
    s->id = next_id_++;
    s->loc = std::move(loc);
    return s;
  }

  bool at_scalar_kind() const {
    return at(Tok::KwInt) || at(Tok::KwFloat) || at(Tok::KwBool) || at(Tok::KwString);
  }

  ValueKind parse_scalar_kind() {
    if (accept(Tok::KwInt))
      return ValueKind::Int;
    if (accept(Tok::KwFloat))
      return ValueKind::Float;
    if (accept(Tok::KwBool))
      return ValueKind::Bool;
    if (accept(Tok::KwString))
      return ValueKind::String;
    throw Diag("syntax", "expected scalar type", cur().loc);
  }

  TypeRef parse_type() {
    TypeRef t;
    if (at_scalar_kind()) {
      ValueKind k = parse_scalar_kind();
      if (accept(Tok::LBracket)) {
        expect(Tok::RBracket);
        t.kind = ValueKind::ArrayRef;
        t.elem = k;
      } else {
        t.kind = k;
      }
    } else {
      Token name = expect(Tok::Ident);
      t.kind = ValueKind::ObjectRef;
      t.class_name = name.text;
    }
    return t;
  }

  ClassDecl parse_class() {
    ClassDecl c;
    c.loc = cur().loc;
    expect(Tok::KwClass);
    c.name = expect(Tok::Ident).text;
    expect(Tok::LBrace);
    while (!accept(Tok::RBrace)) {
      FieldDecl f;
      f.loc = cur().loc;
      f.type = parse_type();
      f.name = expect(Tok::Ident).text;
      expect(Tok::Semi);
      c.fields.push_back(std::move(f));
    }
    return c;
  }

  FuncDecl parse_func() {
    FuncDecl f;
    f.loc = cur().loc;
    expect(Tok::KwFn);
    f.name = expect(Tok::Ident).text;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      do {
        f.params.push_back(expect(Tok::Ident).text);
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen);
    f.body = parse_block();
    return f;
  }

  std::vector<StmtPtr> parse_block() {
    expect(Tok::LBrace);
    std::vector<StmtPtr> out;
    while (!accept(Tok::RBrace))
      out.push_back(parse_stmt());
    return out;
  }

  StmtPtr parse_stmt() {
    SourceLoc loc = cur().loc;
    if (accept(Tok::KwVar)) {
      auto s = new_stmt(Stmt::Kind::VarDecl, loc);
      s->name = expect(Tok::Ident).text;
      if (accept(Tok::Assign))
        s->expr = parse_expr();
      expect(Tok::Semi);
      return s;
    }
    if (accept(Tok::KwIf)) {
      auto s = new_stmt(Stmt::Kind::If, loc);
      expect(Tok::LParen);
      s->expr = parse_expr();
      expect(Tok::RParen);
      s->body = parse_block();
      if (accept(Tok::KwElse))
        s->else_body = parse_block();
      return s;
    }
    if (accept(Tok::KwWhile)) {
      auto s = new_stmt(Stmt::Kind::While, loc);
      expect(Tok::LParen);
      s->expr = parse_expr();
      expect(Tok::RParen);
      s->body = parse_block();
      return s;
    }
    if (accept(Tok::KwFor)) {
      auto s = new_stmt(Stmt::Kind::ForEach, loc);
      expect(Tok::LParen);
      s->name = expect(Tok::Ident).text;
      if (!accept(Tok::Colon))
        expect(Tok::KwIn);
      s->expr = parse_expr();
      expect(Tok::RParen);
      s->body = parse_block();
      return s;
    }
    if (accept(Tok::KwReturn)) {
      auto s = new_stmt(Stmt::Kind::Return, loc);
      if (!at(Tok::Semi))
        s->expr = parse_expr();
      expect(Tok::Semi);
      return s;
    }
    if (accept(Tok::KwPrint)) {
      auto s = new_stmt(Stmt::Kind::Print, loc);
      expect(Tok::LParen);
      if (!at(Tok::RParen)) {
        do {
          s->args.push_back(parse_expr());
        } while (accept(Tok::Comma));
      }
      expect(Tok::RParen);
      expect(Tok::Semi);
      return s;
    }
    // assignment or expression statement
    ExprPtr e = parse_expr();
    if (at(Tok::Assign) || at(Tok::PlusAssign) || at(Tok::MinusAssign) ||
        at(Tok::StarAssign) || at(Tok::SlashAssign)) {
      if (e->kind != Expr::Kind::Var && e->kind != Expr::Kind::Field &&
          e->kind != Expr::Kind::Index)
        throw Diag("syntax", "invalid assignment target", e->loc);
      auto s = new_stmt(Stmt::Kind::Assign, loc);
      Tok op = cur().kind;
      ++i_;
      s->lhs = std::move(e);
      s->expr = parse_expr();
      if (op != Tok::Assign) {
        s->is_compound = true;
        s->compound_op = op == Tok::PlusAssign    ? BinOp::Add
                         : op == Tok::MinusAssign ? BinOp::Sub
                         : op == Tok::StarAssign  ? BinOp::Mul
                                                  : BinOp::Div;
      }
      expect(Tok::Semi);
      return s;
    }
    expect(Tok::Semi);
    auto s = new_stmt(Stmt::Kind::ExprStmt, loc);
    s->expr = std::move(e);
    return s;
  }

  ExprPtr new_expr(Expr::Kind k, SourceLoc loc) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->loc = std::move(loc);
    return e;
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr e = parse_and();
    while (at(Tok::OrOr)) {
      SourceLoc loc = cur().loc;
      ++i_;
      auto n = new_expr(Expr::Kind::Binary, loc);
      n->bin = BinOp::Or;
      n->a = std::move(e);
      n->b = parse_and();
      e = std::move(n);
    }
    return e;
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_cmp();
    while (at(Tok::AndAnd)) {
      SourceLoc loc = cur().loc;
      ++i_;
      auto n = new_expr(Expr::Kind::Binary, loc);
      n->bin = BinOp::And;
      n->a = std::move(e);
      n->b = parse_cmp();
      e = std::move(n);
    }
    return e;
  }

  ExprPtr parse_cmp() {
    ExprPtr e = parse_add();
    auto op = [&]() -> std::optional<BinOp> {
      switch (cur().kind) {
      case Tok::Eq: return BinOp::Eq;
      case Tok::Ne: return BinOp::Ne;
      case Tok::Lt: return BinOp::Lt;
      case Tok::Le: return BinOp::Le;
      case Tok::Gt: return BinOp::Gt;
      case Tok::Ge: return BinOp::Ge;
      default: return std::nullopt;
      }
    }();
    if (op) {
      SourceLoc loc = cur().loc;
      ++i_;
      auto n = new_expr(Expr::Kind::Binary, loc);
      n->bin = *op;
      n->a = std::move(e);
      n->b = parse_add();
      e = std::move(n);
    }
    return e;
  }

  ExprPtr parse_add() {
    ExprPtr e = parse_mul();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      BinOp op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
      SourceLoc loc = cur().loc;
      ++i_;
      auto n = new_expr(Expr::Kind::Binary, loc);
      n->bin = op;
      n->a = std::move(e);
      n->b = parse_mul();
      e = std::move(n);
    }
    return e;
  }

  ExprPtr parse_mul() {
    ExprPtr e = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::Percent)) {
      BinOp op = at(Tok::Star) ? BinOp::Mul : at(Tok::Slash) ? BinOp::Div : BinOp::Mod;
      SourceLoc loc = cur().loc;
      ++i_;
      auto n = new_expr(Expr::Kind::Binary, loc);
      n->bin = op;
      n->a = std::move(e);
      n->b = parse_unary();
      e = std::move(n);
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Minus) || at(Tok::Bang)) {
      UnOp op = at(Tok::Minus) ? UnOp::Neg : UnOp::Not;
      SourceLoc loc = cur().loc;
      ++i_;
      auto n = new_expr(Expr::Kind::Unary, loc);
      n->un = op;
      n->a = parse_unary();
      return n;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    while (true) {
      if (accept(Tok::Dot)) {
        SourceLoc loc = cur().loc;
        auto n = new_expr(Expr::Kind::Field, loc);
        n->name = expect(Tok::Ident).text;
        n->a = std::move(e);
        e = std::move(n);
      } else if (at(Tok::LBracket)) {
        SourceLoc loc = cur().loc;
        ++i_;
        auto n = new_expr(Expr::Kind::Index, loc);
        n->a = std::move(e);
        n->b = parse_expr();
        expect(Tok::RBracket);
        e = std::move(n);
      } else if (at(Tok::PlusPlus) || at(Tok::MinusMinus)) {
        int delta = at(Tok::PlusPlus) ? 1 : -1;
        SourceLoc loc = cur().loc;
        ++i_;
        if (e->kind != Expr::Kind::Var)
          throw Diag("syntax", "++/-- applies to plain variables only", loc);
        auto n = new_expr(Expr::Kind::PostIncDec, loc);
        n->name = e->name;
        n->inc_delta = delta;
        e = std::move(n);
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_primary() {
    SourceLoc loc = cur().loc;
    if (at(Tok::Int)) {
      auto e = new_expr(Expr::Kind::IntLit, loc);
      e->int_val = cur().int_val;
      ++i_;
      return e;
    }
    if (at(Tok::Float)) {
      auto e = new_expr(Expr::Kind::FloatLit, loc);
      e->float_val = cur().float_val;
      ++i_;
      return e;
    }
    if (at(Tok::String)) {
      auto e = new_expr(Expr::Kind::StringLit, loc);
      e->str_val = cur().text;
      ++i_;
      return e;
    }
    if (accept(Tok::KwTrue)) {
      auto e = new_expr(Expr::Kind::BoolLit, loc);
      e->bool_val = true;
      return e;
    }
    if (accept(Tok::KwFalse)) {
      auto e = new_expr(Expr::Kind::BoolLit, loc);
      e->bool_val = false;
      return e;
    }
    if (accept(Tok::KwNull))
      return new_expr(Expr::Kind::NullLit, loc);
    if (accept(Tok::KwLen)) {
      expect(Tok::LParen);
      auto e = new_expr(Expr::Kind::Len, loc);
      e->a = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::KwQuery) || at(Tok::KwExec)) {
      bool is_exec = at(Tok::KwExec);
      ++i_;
      expect(Tok::LParen);
      auto e = new_expr(Expr::Kind::Query, loc);
      e->is_exec = is_exec;
      e->str_val = expect(Tok::String).text;
      while (accept(Tok::Comma))
        e->args.push_back(parse_expr());
      expect(Tok::RParen);
      return e;
    }
    if (accept(Tok::KwNew)) {
      if (at_scalar_kind()) {
        ValueKind k = parse_scalar_kind();
        expect(Tok::LBracket);
        auto e = new_expr(Expr::Kind::NewArray, loc);
        e->elem_kind = k;
        e->a = parse_expr();
        expect(Tok::RBracket);
        return e;
      }
      Token name = expect(Tok::Ident);
      expect(Tok::LParen);
      expect(Tok::RParen);
      auto e = new_expr(Expr::Kind::NewObject, loc);
      e->name = name.text;
      return e;
    }
    if (at(Tok::Ident)) {
      Token name = toks_[i_++];
      if (accept(Tok::LParen)) {
        auto e = new_expr(Expr::Kind::Call, loc);
        e->name = name.text;
        if (!at(Tok::RParen)) {
          do {
            e->args.push_back(parse_expr());
          } while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        return e;
      }
      auto e = new_expr(Expr::Kind::Var, loc);
      e->name = name.text;
      return e;
    }
    if (accept(Tok::LParen)) {
      ExprPtr e = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    throw Diag("syntax", "expected expression", loc);
  }
};

} // namespace

Program parse(const std::string &source_text, const std::string &filename) {
  Lexer lexer(source_text, filename);
  Parser parser(lexer.run());
  Program p = parser.run();
  resolve(p);
  return p;
}

} // namespace pyx
