#include "azulink/parse.hpp"

#include <cctype>

namespace azulink {

namespace {

struct Token {
  enum Kind { Number, Var, Caret, Star, Plus, Minus, End } kind;
  Rational value;
  bool plain_int = false;  // digits only, usable as an exponent
  int axis = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  Token tok_;

  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::End, 0, false, 0};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      bool plain = true;
      if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.')) {
        plain = false;
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw std::invalid_argument("malformed scalar in polynomial text");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      tok_ = {Token::Number, rational_from_string(s_.substr(start, pos_ - start)),
              plain, 0};
      return;
    }
    ++pos_;
    switch (c) {
      case 'x': tok_ = {Token::Var, 0, false, 0}; return;
      case 'y': tok_ = {Token::Var, 0, false, 1}; return;
      case 'z': tok_ = {Token::Var, 0, false, 2}; return;
      case '^': tok_ = {Token::Caret, 0, false, 0}; return;
      case '*': tok_ = {Token::Star, 0, false, 0}; return;
      case '+': tok_ = {Token::Plus, 0, false, 0}; return;
      case '-': tok_ = {Token::Minus, 0, false, 0}; return;
      default:
        throw std::invalid_argument(std::string("unexpected character '") + c +
                                    "' in polynomial text");
    }
  }
};

// term := factor ( '*'? factor )*, factor := scalar | var ('^' int)?
TriPoly parse_term(Lexer& lex) {
  Rational coeff(1);
  std::array<int, 3> expo{0, 0, 0};
  bool have_factor = false;
  for (;;) {
    const Token& t = lex.peek();
    if (t.kind == Token::Star) {
      lex.take();
      if (lex.peek().kind != Token::Number && lex.peek().kind != Token::Var)
        throw std::invalid_argument("dangling '*' in polynomial text");
      continue;
    }
    if (t.kind == Token::Number) {
      coeff *= lex.take().value;
      have_factor = true;
      continue;
    }
    if (t.kind == Token::Var) {
      int axis = lex.take().axis;
      long e = 1;
      if (lex.peek().kind == Token::Caret) {
        lex.take();
        Token p = lex.take();
        if (p.kind != Token::Number || !p.plain_int)
          throw std::invalid_argument("exponent must be a nonnegative integer");
        e = p.value.get_num().get_si();
        if (e > 64) throw std::invalid_argument("exponent too large");
      }
      expo[axis] += static_cast<int>(e);
      have_factor = true;
      continue;
    }
    break;
  }
  if (!have_factor) throw std::invalid_argument("empty term in polynomial text");
  return TriPoly::monomial(coeff, expo[0], expo[1], expo[2]);
}

}  // namespace

TriPoly parse_tripoly(const std::string& text) {
  Lexer lex(text);
  TriPoly acc;
  bool first = true;
  for (;;) {
    int sign = 1;
    if (lex.peek().kind == Token::Plus || lex.peek().kind == Token::Minus) {
      sign = lex.take().kind == Token::Minus ? -1 : 1;
    } else if (!first) {
      if (lex.peek().kind == Token::End) break;
      throw std::invalid_argument("expected '+' or '-' between terms");
    } else if (lex.peek().kind == Token::End) {
      throw std::invalid_argument("empty polynomial text");
    }
    TriPoly term = parse_term(lex);
    acc = sign < 0 ? acc - term : acc + term;
    first = false;
  }
  return acc;
}

UniPoly<Rational> parse_unipoly(const std::string& text) {
  TriPoly p = parse_tripoly(text);
  if (p.uses(1) || p.uses(2))
    throw std::invalid_argument("expected a univariate polynomial in x");
  return p.to_unipoly(0);
}

ParsedTriple parse_triple(const std::string& text) {
  size_t a = text.find(';');
  size_t b = a == std::string::npos ? std::string::npos : text.find(';', a + 1);
  if (b == std::string::npos || text.find(';', b + 1) != std::string::npos)
    throw std::invalid_argument("triple must be \"u;v;n\"");
  ParsedTriple t;
  t.u = parse_unipoly(text.substr(0, a));
  t.v = parse_unipoly(text.substr(a + 1, b - a - 1));
  Rational n = rational_from_string(text.substr(b + 1));
  if (n.get_den() != 1)
    throw std::invalid_argument("triple coefficient n must be an integer");
  t.n = n.get_num().get_si();
  return t;
}

}  // namespace azulink
