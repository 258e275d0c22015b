#ifndef PYX_FRONTEND_LEXER_HPP
#define PYX_FRONTEND_LEXER_HPP

#include "pyx/support.hpp"

#include <string>
#include <vector>

namespace pyx {

enum class Tok : uint8_t {
  End, Ident, Int, Float, String,
  // keywords
  KwClass, KwFn, KwEntry, KwVar, KwIf, KwElse, KwWhile, KwFor, KwIn,
  KwReturn, KwPrint, KwQuery, KwExec, KwNew, KwLen, KwTrue, KwFalse, KwNull,
  KwInt, KwFloat, KwBool, KwString,
  // punctuation
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Semi, Comma, Dot, Colon,
  Assign, PlusAssign, MinusAssign, StarAssign, SlashAssign,
  Plus, Minus, Star, Slash, Percent,
  PlusPlus, MinusMinus,
  Eq, Ne, Lt, Le, Gt, Ge, AndAnd, OrOr, Bang
};

struct Token {
  Tok kind;
  std::string text;   // identifier / string contents
  int64_t int_val = 0;
  double float_val = 0;
  SourceLoc loc;
};

class Lexer {
public:
  Lexer(const std::string &src, std::string filename);
  std::vector<Token> run(); // throws Diag("syntax") on bad input

private:
  const std::string &src_;
  std::string file_;
  size_t pos_ = 0;
  uint32_t line_ = 1, col_ = 1;

  SourceLoc here() const;
  char peek(size_t ahead = 0) const;
  char advance();
  bool match(char c);
  Token lex_number();
  Token lex_string();
  Token lex_ident();
};

} // namespace pyx

#endif
