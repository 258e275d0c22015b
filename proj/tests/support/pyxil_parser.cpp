#include "pyxil_parser.hpp"

#include "../../core/src/frontend/lexer.hpp"

namespace pyxtest {

using namespace pyx;

namespace {

class PyxilParser {
public:
  explicit PyxilParser(const std::string &text) {
    Lexer lexer(text, "<pyxil>");
    toks_ = lexer.run();
  }

  PyxilProgram run() {
    while (!at(Tok::End)) {
      if (at(Tok::KwClass))
        parse_class();
      else if (at(Tok::KwFn))
        parse_fn();
      else if (at(Tok::KwEntry)) {
        expect(Tok::KwEntry);
        std::string name = expect(Tok::Ident).text;
        expect(Tok::Semi);
        px_.program.entry_points.push_back(EntryPoint{name, next_id_++});
      } else {
        throw Diag("pyxil", "unexpected token at top level", cur().loc);
      }
    }
    px_.program.next_stmt_id = next_id_;
    return std::move(px_);
  }

private:
  std::vector<Token> toks_;
  size_t i_ = 0;
  uint32_t next_id_ = 1;
  PyxilProgram px_;

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
      throw Diag("pyxil", "unexpected token", cur().loc);
    return toks_[i_++];
  }

  // ":APP:" lexes as Colon Ident Colon
  Host parse_label() {
    expect(Tok::Colon);
    std::string name = expect(Tok::Ident).text;
    expect(Tok::Colon);
    if (name == "APP")
      return Host::App;
    if (name == "DB")
      return Host::Db;
    throw Diag("pyxil", "bad placement label " + name);
  }

  bool at_label() const { return at(Tok::Colon); }

  TypeRef parse_type() {
    TypeRef t;
    auto scalar = [&](Tok k, ValueKind v) {
      if (!accept(k))
        return false;
      if (accept(Tok::LBracket)) {
        expect(Tok::RBracket);
        t.kind = ValueKind::ArrayRef;
        t.elem = v;
      } else {
        t.kind = v;
      }
      return true;
    };
    if (scalar(Tok::KwInt, ValueKind::Int) || scalar(Tok::KwFloat, ValueKind::Float) ||
        scalar(Tok::KwBool, ValueKind::Bool) || scalar(Tok::KwString, ValueKind::String))
      return t;
    t.kind = ValueKind::ObjectRef;
    t.class_name = expect(Tok::Ident).text;
    return t;
  }

  void parse_class() {
    expect(Tok::KwClass);
    ClassDecl c;
    c.name = expect(Tok::Ident).text;
    expect(Tok::LBrace);
    std::vector<Host> hosts;
    while (!accept(Tok::RBrace)) {
      Host h = parse_label();
      FieldDecl f;
      f.type = parse_type();
      f.name = expect(Tok::Ident).text;
      expect(Tok::Semi);
      c.fields.push_back(std::move(f));
      hosts.push_back(h);
    }
    px_.program.classes.push_back(std::move(c));
    // field indices are program-wide; record hosts now that the class exists
    const ClassDecl &added = px_.program.classes.back();
    for (size_t k = 0; k < added.fields.size(); ++k)
      px_.field_host[field_index(px_.program, added.name, added.fields[k].name)] =
          hosts[k];
  }

  void parse_fn() {
    expect(Tok::KwFn);
    FuncDecl f;
    f.name = expect(Tok::Ident).text;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      do {
        f.params.push_back(expect(Tok::Ident).text);
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen);
    expect(Tok::LBrace);
    if (at(Tok::KwVar)) {
      expect(Tok::KwVar);
      do {
        f.locals.push_back(expect(Tok::Ident).text);
      } while (accept(Tok::Comma));
      expect(Tok::Semi);
    }
    f.body = parse_body();
    expect(Tok::RBrace);
    px_.program.functions.push_back(std::move(f));
  }

  std::vector<StmtPtr> parse_body() {
    std::vector<StmtPtr> out;
    while (at_label())
      parse_stmt(out);
    return out;
  }

  // sends attach to the statement they follow
  void parse_sends(uint32_t stmt_id) {
    while (at_label()) {
      size_t save = i_;
      parse_label();
      if (!at(Tok::Ident) ||
          (cur().text != "sendAPP" && cur().text != "sendDB" &&
           cur().text != "sendNative")) {
        i_ = save;
        return;
      }
      std::string fn = expect(Tok::Ident).text;
      expect(Tok::LParen);
      std::string var = expect(Tok::Ident).text;
      expect(Tok::RParen);
      expect(Tok::Semi);
      SyncOp op;
      op.kind = fn == "sendAPP"  ? SyncOp::Kind::SendApp
                : fn == "sendDB" ? SyncOp::Kind::SendDb
                                 : SyncOp::Kind::SendNative;
      op.var = var;
      px_.sync_after[stmt_id].push_back(op);
    }
  }

  StmtPtr mk(Stmt::Kind k, Host h) {
    auto s = std::make_unique<Stmt>();
    s->kind = k;
    s->id = next_id_++;
    px_.stmt_host[s->id] = h;
    return s;
  }

  void parse_stmt(std::vector<StmtPtr> &out) {
    Host h = parse_label();
    if (accept(Tok::KwPrint)) {
      auto s = mk(Stmt::Kind::Print, h);
      expect(Tok::LParen);
      if (!at(Tok::RParen)) {
        do {
          s->args.push_back(parse_expr());
        } while (accept(Tok::Comma));
      }
      expect(Tok::RParen);
      expect(Tok::Semi);
      uint32_t id = s->id;
      out.push_back(std::move(s));
      parse_sends(id);
      return;
    }
    if (accept(Tok::KwReturn)) {
      auto s = mk(Stmt::Kind::Return, h);
      if (!at(Tok::Semi))
        s->expr = parse_expr();
      expect(Tok::Semi);
      uint32_t id = s->id;
      out.push_back(std::move(s));
      parse_sends(id);
      return;
    }
    if (accept(Tok::KwIf)) {
      auto s = mk(Stmt::Kind::If, h);
      expect(Tok::LParen);
      s->expr = parse_expr();
      expect(Tok::RParen);
      expect(Tok::LBrace);
      s->body = parse_body();
      if (accept(Tok::RBrace) && accept(Tok::KwElse)) {
        expect(Tok::LBrace);
        s->else_body = parse_body();
        expect(Tok::RBrace);
      }
      uint32_t id = s->id;
      out.push_back(std::move(s));
      parse_sends(id);
      return;
    }
    if (accept(Tok::KwWhile)) {
      auto s = mk(Stmt::Kind::While, h);
      expect(Tok::LParen);
      s->expr = parse_expr();
      expect(Tok::RParen);
      expect(Tok::LBrace);
      // "cond:" and "do:" section markers
      if (at(Tok::Ident) && cur().text == "cond") {
        ++i_;
        expect(Tok::Colon);
        s->cond_prelude = parse_body();
      }
      if (at(Tok::Ident) && cur().text == "do") {
        ++i_;
        expect(Tok::Colon);
        s->body = parse_body();
      }
      expect(Tok::RBrace);
      uint32_t id = s->id;
      out.push_back(std::move(s));
      parse_sends(id);
      return;
    }
    // assignment or expression statement
    ExprPtr e = parse_expr();
    if (accept(Tok::Assign)) {
      auto s = mk(Stmt::Kind::Assign, h);
      s->lhs = std::move(e);
      s->expr = parse_expr();
      expect(Tok::Semi);
      uint32_t id = s->id;
      out.push_back(std::move(s));
      parse_sends(id);
      return;
    }
    expect(Tok::Semi);
    auto s = mk(Stmt::Kind::ExprStmt, h);
    s->expr = std::move(e);
    uint32_t id = s->id;
    out.push_back(std::move(s));
    parse_sends(id);
  }

  ExprPtr new_expr(Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    return e;
  }

  // normalized expressions: atoms, one operator, parenthesized binaries
  ExprPtr parse_expr() {
    if (at(Tok::Minus) || at(Tok::Bang)) {
      UnOp op = at(Tok::Minus) ? UnOp::Neg : UnOp::Not;
      ++i_;
      auto e = new_expr(Expr::Kind::Unary);
      e->un = op;
      e->a = parse_expr();
      return e;
    }
    if (accept(Tok::LParen)) {
      ExprPtr a = parse_expr();
      BinOp op;
      switch (cur().kind) {
      case Tok::Plus: op = BinOp::Add; break;
      case Tok::Minus: op = BinOp::Sub; break;
      case Tok::Star: op = BinOp::Mul; break;
      case Tok::Slash: op = BinOp::Div; break;
      case Tok::Percent: op = BinOp::Mod; break;
      case Tok::Eq: op = BinOp::Eq; break;
      case Tok::Ne: op = BinOp::Ne; break;
      case Tok::Lt: op = BinOp::Lt; break;
      case Tok::Le: op = BinOp::Le; break;
      case Tok::Gt: op = BinOp::Gt; break;
      case Tok::Ge: op = BinOp::Ge; break;
      default:
        throw Diag("pyxil", "expected a binary operator", cur().loc);
      }
      ++i_;
      auto e = new_expr(Expr::Kind::Binary);
      e->bin = op;
      e->a = std::move(a);
      e->b = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    while (true) {
      if (accept(Tok::Dot)) {
        auto n = new_expr(Expr::Kind::Field);
        n->name = expect(Tok::Ident).text;
        n->a = std::move(e);
        e = std::move(n);
      } else if (accept(Tok::LBracket)) {
        auto n = new_expr(Expr::Kind::Index);
        n->a = std::move(e);
        n->b = parse_expr();
        expect(Tok::RBracket);
        e = std::move(n);
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_primary() {
    if (at(Tok::Int)) {
      auto e = new_expr(Expr::Kind::IntLit);
      e->int_val = cur().int_val;
      ++i_;
      return e;
    }
    if (at(Tok::Float)) {
      auto e = new_expr(Expr::Kind::FloatLit);
      e->float_val = cur().float_val;
      ++i_;
      return e;
    }
    if (at(Tok::String)) {
      auto e = new_expr(Expr::Kind::StringLit);
      e->str_val = cur().text;
      ++i_;
      return e;
    }
    if (accept(Tok::KwTrue)) {
      auto e = new_expr(Expr::Kind::BoolLit);
      e->bool_val = true;
      return e;
    }
    if (accept(Tok::KwFalse)) {
      auto e = new_expr(Expr::Kind::BoolLit);
      e->bool_val = false;
      return e;
    }
    if (accept(Tok::KwNull))
      return new_expr(Expr::Kind::NullLit);
    if (accept(Tok::KwLen)) {
      expect(Tok::LParen);
      auto e = new_expr(Expr::Kind::Len);
      e->a = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::KwQuery) || at(Tok::KwExec)) {
      bool is_exec = at(Tok::KwExec);
      ++i_;
      expect(Tok::LParen);
      auto e = new_expr(Expr::Kind::Query);
      e->is_exec = is_exec;
      e->str_val = expect(Tok::String).text;
      while (accept(Tok::Comma))
        e->args.push_back(parse_expr());
      expect(Tok::RParen);
      return e;
    }
    if (accept(Tok::KwNew)) {
      if (at(Tok::Ident)) {
        auto e = new_expr(Expr::Kind::NewObject);
        e->name = expect(Tok::Ident).text;
        expect(Tok::LParen);
        expect(Tok::RParen);
        return e;
      }
      TypeRef t = parse_type_elem();
      expect(Tok::LBracket);
      auto e = new_expr(Expr::Kind::NewArray);
      e->elem_kind = t.kind;
      e->a = parse_expr();
      expect(Tok::RBracket);
      return e;
    }
    Token name = expect(Tok::Ident);
    if (accept(Tok::LParen)) {
      auto e = new_expr(Expr::Kind::Call);
      e->name = name.text;
      if (!at(Tok::RParen)) {
        do {
          e->args.push_back(parse_expr());
        } while (accept(Tok::Comma));
      }
      expect(Tok::RParen);
      return e;
    }
    auto e = new_expr(Expr::Kind::Var);
    e->name = name.text;
    return e;
  }

  TypeRef parse_type_elem() {
    TypeRef t;
    if (accept(Tok::KwInt))
      t.kind = ValueKind::Int;
    else if (accept(Tok::KwFloat))
      t.kind = ValueKind::Float;
    else if (accept(Tok::KwBool))
      t.kind = ValueKind::Bool;
    else if (accept(Tok::KwString))
      t.kind = ValueKind::String;
    else
      throw Diag("pyxil", "expected element type", cur().loc);
    return t;
  }
};

} // namespace

PyxilProgram parse_pyxil(const std::string &text) { return PyxilParser(text).run(); }

} // namespace pyxtest
