#include "lexer.hpp"

#include <cctype>
#include <charconv>
#include <unordered_map>

namespace pyx {

namespace {
const std::unordered_map<std::string, Tok> kKeywords = {
    {"class", Tok::KwClass},   {"fn", Tok::KwFn},       {"entry", Tok::KwEntry},
    {"var", Tok::KwVar},       {"if", Tok::KwIf},       {"else", Tok::KwElse},
    {"while", Tok::KwWhile},   {"for", Tok::KwFor},     {"in", Tok::KwIn},
    {"return", Tok::KwReturn}, {"print", Tok::KwPrint}, {"query", Tok::KwQuery},
    {"exec", Tok::KwExec},     {"new", Tok::KwNew},     {"len", Tok::KwLen},
    {"true", Tok::KwTrue},     {"false", Tok::KwFalse}, {"null", Tok::KwNull},
    {"int", Tok::KwInt},       {"float", Tok::KwFloat}, {"bool", Tok::KwBool},
    {"string", Tok::KwString},
};
}

Lexer::Lexer(const std::string &src, std::string filename)
    : src_(src), file_(std::move(filename)) {}

SourceLoc Lexer::here() const { return SourceLoc{file_, line_, col_}; }

char Lexer::peek(size_t ahead) const {
  return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
}

char Lexer::advance() {
  char c = src_[pos_++];
  if (c == '\n') {
    ++line_;
    col_ = 1;
  } else {
    ++col_;
  }
  return c;
}

bool Lexer::match(char c) {
  if (peek() != c)
    return false;
  advance();
  return true;
}

Token Lexer::lex_number() {
  SourceLoc loc = here();
  size_t start = pos_;
  while (std::isdigit(static_cast<unsigned char>(peek())))
    advance();
  bool is_float = false;
  if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
    is_float = true;
    advance();
    while (std::isdigit(static_cast<unsigned char>(peek())))
      advance();
  }
  if (peek() == 'e' || peek() == 'E') {
    size_t save = pos_;
    advance();
    if (peek() == '+' || peek() == '-')
      advance();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      is_float = true;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        advance();
    } else {
      pos_ = save; // not an exponent, back off
    }
  }
  std::string text = src_.substr(start, pos_ - start);
  Token t;
  t.loc = loc;
  if (is_float) {
    t.kind = Tok::Float;
    t.float_val = std::stod(text);
  } else {
    t.kind = Tok::Int;
    int64_t v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{})
      throw Diag("syntax", "integer literal out of range: " + text, loc);
    t.int_val = v;
  }
  return t;
}

Token Lexer::lex_string() {
  SourceLoc loc = here();
  advance(); // opening quote
  std::string out;
  while (true) {
    if (pos_ >= src_.size() || peek() == '\n')
      throw Diag("syntax", "unterminated string literal", loc);
    char c = advance();
    if (c == '"')
      break;
    if (c == '\\') {
      char e = advance();
      switch (e) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case '\\': out += '\\'; break;
      case '"': out += '"'; break;
      default:
        throw Diag("syntax", std::string("unknown escape '\\") + e + "'", loc);
      }
    } else {
      out += c;
    }
  }
  Token t;
  t.kind = Tok::String;
  t.text = out;
  t.loc = loc;
  return t;
}

Token Lexer::lex_ident() {
  SourceLoc loc = here();
  size_t start = pos_;
  while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '$')
    advance();
  std::string text = src_.substr(start, pos_ - start);
  Token t;
  t.loc = loc;
  auto it = kKeywords.find(text);
  if (it != kKeywords.end()) {
    t.kind = it->second;
    t.text = text;
  } else {
    t.kind = Tok::Ident;
    t.text = text;
  }
  return t;
}

std::vector<Token> Lexer::run() {
  std::vector<Token> out;
  while (pos_ < src_.size()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (pos_ < src_.size() && peek() != '\n')
        advance();
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      out.push_back(lex_number());
      continue;
    }
    if (c == '"') {
      out.push_back(lex_string());
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      out.push_back(lex_ident());
      continue;
    }
    SourceLoc loc = here();
    advance();
    Token t;
    t.loc = loc;
    switch (c) {
    case '{': t.kind = Tok::LBrace; break;
    case '}': t.kind = Tok::RBrace; break;
    case '(': t.kind = Tok::LParen; break;
    case ')': t.kind = Tok::RParen; break;
    case '[': t.kind = Tok::LBracket; break;
    case ']': t.kind = Tok::RBracket; break;
    case ';': t.kind = Tok::Semi; break;
    case ',': t.kind = Tok::Comma; break;
    case '.': t.kind = Tok::Dot; break;
    case ':': t.kind = Tok::Colon; break;
    case '+':
      t.kind = match('+') ? Tok::PlusPlus : match('=') ? Tok::PlusAssign : Tok::Plus;
      break;
    case '-':
      t.kind = match('-') ? Tok::MinusMinus : match('=') ? Tok::MinusAssign : Tok::Minus;
      break;
    case '*': t.kind = match('=') ? Tok::StarAssign : Tok::Star; break;
    case '/': t.kind = match('=') ? Tok::SlashAssign : Tok::Slash; break;
    case '%': t.kind = Tok::Percent; break;
    case '=': t.kind = match('=') ? Tok::Eq : Tok::Assign; break;
    case '!': t.kind = match('=') ? Tok::Ne : Tok::Bang; break;
    case '<': t.kind = match('=') ? Tok::Le : Tok::Lt; break;
    case '>': t.kind = match('=') ? Tok::Ge : Tok::Gt; break;
    case '&':
      if (!match('&'))
        throw Diag("syntax", "expected '&&'", loc);
      t.kind = Tok::AndAnd;
      break;
    case '|':
      if (!match('|'))
        throw Diag("syntax", "expected '||'", loc);
      t.kind = Tok::OrOr;
      break;
    default:
      throw Diag("syntax", std::string("unexpected character '") + c + "'", loc);
    }
    out.push_back(t);
  }
  Token end;
  end.kind = Tok::End;
  end.loc = here();
  out.push_back(end);
  return out;
}

} // namespace pyx
