#ifndef PYX_FRONTEND_HPP
#define PYX_FRONTEND_HPP

#include "pyx/support.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

// Frontend for the Pyx DSL: AST, parser, resolver, normalizer and the text
// printers. The normalized form is statement-granular: at most one heap
// access or one call per statement, suitable for node-per-statement graph
// construction. Grammar is documented in docs/grammar.md.

namespace pyx {

enum class ValueKind : uint8_t { Int, Float, Bool, String, ArrayRef, ObjectRef };

const char *value_kind_name(ValueKind k);

// Declared type of a class field.
struct TypeRef {
  ValueKind kind = ValueKind::Int;
  ValueKind elem = ValueKind::Int; // for ArrayRef
  std::string class_name;          // for ObjectRef
  std::string str() const;
};

enum class BinOp : uint8_t { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnOp : uint8_t { Neg, Not };

const char *binop_name(BinOp op);
const char *unop_name(UnOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind : uint8_t {
    IntLit, FloatLit, BoolLit, StringLit, NullLit,
    Var,
    Field,     // a.f            (a = base)
    Index,     // a[i]           (a = base, b = index)
    Len,       // len(a)
    Call,      // f(args...)
    Query,     // query("tmpl", args...) / exec("tmpl", args...)
    NewObject, // new C()
    NewArray,  // new int[n]     (a = length)
    Binary,    // a op b
    Unary,     // op a
    PostIncDec // v++ / v--      (name = var)
  };

  Kind kind;
  SourceLoc loc;

  int64_t int_val = 0;
  double float_val = 0;
  bool bool_val = false;
  std::string str_val;   // StringLit text / Query template
  std::string name;      // Var, Field member, Call callee, NewObject class
  ValueKind elem_kind = ValueKind::Int; // NewArray element kind
  BinOp bin = BinOp::Add;
  UnOp un = UnOp::Neg;
  bool is_exec = false;  // Query: exec() form, discards result
  int inc_delta = 0;     // PostIncDec: +1 or -1

  ExprPtr a, b;
  std::vector<ExprPtr> args; // Call / Query arguments

  bool is_atom() const { // normalized operand: variable or literal
    return kind == Kind::Var || kind == Kind::IntLit || kind == Kind::FloatLit ||
           kind == Kind::BoolLit || kind == Kind::StringLit || kind == Kind::NullLit;
  }
  ExprPtr clone() const;
};

ExprPtr make_var(const std::string &name, SourceLoc loc = {});
ExprPtr make_int(int64_t v, SourceLoc loc = {});

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
  enum class Kind : uint8_t {
    VarDecl, // var x [= init];   (removed by normalize; names kept in FuncDecl::locals)
    Assign,  // lvalue = expr / lvalue op= expr
    ExprStmt,
    If,
    While,   // normalized form: cond_prelude computes the test into a cond atom
    ForEach, // for (x : arr)     (desugared by normalize)
    Return,
    Print
  };

  Kind kind;
  uint32_t id = 0; // unique, assigned at parse, renumbered by normalize
  SourceLoc loc;

  std::string name;      // VarDecl / ForEach variable
  ExprPtr lhs;           // Assign target (Var, Field or Index expression)
  ExprPtr expr;          // init / rhs / condition / array / return value / expr
  bool is_compound = false;
  BinOp compound_op = BinOp::Add;

  std::vector<StmtPtr> body;
  std::vector<StmtPtr> else_body;
  std::vector<StmtPtr> cond_prelude; // While: statements re-evaluated before each test
  std::vector<ExprPtr> args;         // Print arguments

  StmtPtr clone() const;
};

struct FieldDecl {
  std::string name;
  TypeRef type;
  SourceLoc loc;
};

struct ClassDecl {
  std::string name;
  std::vector<FieldDecl> fields;
  SourceLoc loc;
  const FieldDecl *find_field(const std::string &n) const;
};

struct FuncDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> locals; // filled by normalize, declaration order
  std::vector<StmtPtr> body;
  SourceLoc loc;
};

// Synthetic call representing an entry point's wrapper invocation: the graph
// needs a statement-kind node, pinned to APP, standing for the external
// caller. It owns a statement id but lives outside any function body.
struct EntryPoint {
  std::string func;
  uint32_t stmt_id = 0;
};

struct Program {
  std::vector<ClassDecl> classes;
  std::vector<FuncDecl> functions;
  std::vector<EntryPoint> entry_points;
  uint32_t next_stmt_id = 1;

  const FuncDecl *find_function(const std::string &name) const;
  const ClassDecl *find_class(const std::string &name) const;
  const EntryPoint *find_entry(const std::string &name) const;
  Program clone() const;
};

// The 13 statement kinds of the normalized form.
enum class NormKind : uint8_t {
  Assign, FieldRead, FieldWrite, ArrayRead, ArrayWrite,
  AllocArray, AllocObject, Call, Query, Print, IfHead, LoopHead, Return
};

const char *norm_kind_name(NormKind k);

// Classify a normalized statement. Throws Diag("internal") if the statement
// does not satisfy the normal form.
NormKind norm_kind(const Stmt &s);

// ---- operations ----

Program parse(const std::string &source_text, const std::string &filename = "<input>");

// Scope and name checks; parse() runs this already, exposed for tests.
void resolve(const Program &p);

// One heap access / one call per statement, compound expressions decomposed
// through fresh `$tN` temporaries, `for` and short-circuit operators lowered,
// locals flattened per function. Idempotent.
Program normalize(const Program &p);

bool is_normal_form(const Program &p);

// Indented structural dump, ids included; golden-test surface and the
// --dump-ast output.
std::string dump_ast(const Program &p);

// Source-syntax rendering of one expression.
std::string expr_text(const Expr &e);

// Walk helpers.
void for_each_stmt(const std::vector<StmtPtr> &body,
                   const std::function<void(const Stmt &)> &fn);
void for_each_stmt_in_program(const Program &p,
                              const std::function<void(const FuncDecl &, const Stmt &)> &fn);

// Program-wide field numbering: classes in declaration order, fields in
// declaration order, 0-based. Shared between the dependence analysis (field
// node ids) and the interpreter's def-use recording.
int field_index(const Program &p, const std::string &cls, const std::string &field);
std::pair<std::string, std::string> field_by_index(const Program &p, int index);
int field_count(const Program &p);

} // namespace pyx

#endif
