#include "nonarch/series_text.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace nonarch {

namespace {

struct Token {
  enum Kind { kNumber, kIdent, kSymbol, kEnd } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance_(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance_();
    return t;
  }
  bool at_symbol(char c) const { return tok_.kind == Token::kSymbol && tok_.text[0] == c; }
  bool at_ident(const char* s) const { return tok_.kind == Token::kIdent && tok_.text == s; }
  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    advance_();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("series parse error at position " + std::to_string(tok_.pos) +
                                ": " + what);
  }

 private:
  void advance_() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    if (i_ >= text_.size()) {
      tok_ = Token{Token::kEnd, "", i_};
      return;
    }
    const std::size_t start = i_;
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      tok_ = Token{Token::kNumber, text_.substr(start, i_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) ++i_;
      tok_ = Token{Token::kIdent, text_.substr(start, i_ - start), start};
      return;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      ++i_;
      tok_ = Token{Token::kSymbol, std::string(1, c), start};
      return;
    }
    throw std::invalid_argument("series parse error at position " + std::to_string(start) +
                                ": unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_{Token::kEnd, "", 0};
};

BigInt parse_bigint(const std::string& digits) { return BigInt(digits); }

class SeriesParser {
 public:
  SeriesParser(const std::string& text, FieldPtr field)
      : lex_(text), field_(std::move(field)) {}

  HahnSeries parse() {
    HahnSeries acc = HahnSeries::zero(field_);
    ExtRational tail = ExtRational::infinity();
    bool negate = false;
    if (lex_.at_symbol('-')) {
      lex_.take();
      negate = true;
    }
    parse_term_(acc, tail, negate);
    while (lex_.at_symbol('+') || lex_.at_symbol('-')) {
      negate = lex_.take().text[0] == '-';
      parse_term_(acc, tail, negate);
    }
    if (lex_.peek().kind != Token::kEnd) lex_.fail("trailing input");
    return acc.truncated(tail);
  }

 private:
  // One summand: either O(power) folded into `tail`, or coeff/power folded
  // into `acc` (negated when `negate`).
  void parse_term_(HahnSeries& acc, ExtRational& tail, bool negate) {
    if (lex_.at_ident("O")) {
      lex_.take();
      lex_.expect_symbol('(');
      tail = min(tail, ExtRational(parse_power_exponent_()));
      lex_.expect_symbol(')');
      if (negate) lex_.fail("O(...) cannot be negated");
      return;
    }
    FieldElement coeff = FieldElement::one(field_);
    bool saw_coeff = false;
    if (!lex_.at_ident("t")) {
      coeff = parse_coeff_();
      saw_coeff = true;
      if (lex_.at_symbol('*')) lex_.take();
    }
    BigRat exponent(0);
    if (lex_.at_ident("t")) {
      lex_.take();
      exponent = lex_.at_symbol('^') ? (lex_.take(), parse_exponent_()) : BigRat(1);
    } else if (!saw_coeff) {
      lex_.fail("expected a coefficient, 't', or 'O('");
    }
    if (negate) coeff = -coeff;
    acc = acc + HahnSeries::monomial(field_, std::move(exponent), std::move(coeff));
  }

  // Inside O(...): "1" (exponent 0), "t", or "t^exp".
  BigRat parse_power_exponent_() {
    if (lex_.peek().kind == Token::kNumber && lex_.peek().text == "1") {
      lex_.take();
      return BigRat(0);
    }
    if (!lex_.at_ident("t")) lex_.fail("expected 't' or '1' inside O(...)");
    lex_.take();
    if (!lex_.at_symbol('^')) return BigRat(1);
    lex_.take();
    return parse_exponent_();
  }

  // integer | -integer | "(" rational ")"
  BigRat parse_exponent_() {
    if (lex_.at_symbol('(')) {
      lex_.take();
      BigRat q = parse_signed_rational_();
      lex_.expect_symbol(')');
      return q;
    }
    return parse_signed_rational_();
  }

  BigRat parse_signed_rational_() {
    bool neg = false;
    if (lex_.at_symbol('-')) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind != Token::kNumber) lex_.fail("expected a number");
    BigInt num = parse_bigint(lex_.take().text);
    BigInt den = 1;
    if (lex_.at_symbol('/')) {
      lex_.take();
      if (lex_.peek().kind != Token::kNumber) lex_.fail("expected a denominator");
      den = parse_bigint(lex_.take().text);
      if (den == 0) lex_.fail("zero denominator");
    }
    BigRat q(num, den);
    return neg ? BigRat(-q) : q;
  }

  // rational | gf-atom | "(" coeff ((+|-) coeff)* ")"
  FieldElement parse_coeff_() {
    if (lex_.at_symbol('(')) {
      lex_.take();
      FieldElement acc = parse_coeff_atom_(false);
      while (lex_.at_symbol('+') || lex_.at_symbol('-')) {
        const bool neg = lex_.take().text[0] == '-';
        acc = acc + parse_coeff_atom_(neg);
      }
      lex_.expect_symbol(')');
      return acc;
    }
    return parse_coeff_atom_(false);
  }

  // [int *] g [^ int] | int [/ int]
  FieldElement parse_coeff_atom_(bool negate) {
    FieldElement out = FieldElement::one(field_);
    bool have_value = false;
    if (lex_.peek().kind == Token::kNumber) {
      BigInt num = parse_bigint(lex_.take().text);
      if (lex_.at_symbol('/')) {
        lex_.take();
        if (lex_.peek().kind != Token::kNumber) lex_.fail("expected a denominator");
        BigInt den = parse_bigint(lex_.take().text);
        if (den == 0) lex_.fail("zero denominator");
        out = FieldElement::from_rational(field_, BigRat(num, den));
      } else {
        out = FieldElement::from_integer(field_, num);
      }
      have_value = true;
      if (lex_.at_symbol('*')) lex_.take();
    }
    if (lex_.at_ident("g")) {
      // In the text format "g" always means the extension generator; over the
      // rationals or a prime field the symbol has no rendered counterpart, so
      // accepting it would break round-trip stability.
      if (field_->is_rationals() || field_->degree() < 2) {
        lex_.fail("the symbol 'g' needs an extension field");
      }
      lex_.take();
      FieldElement g = FieldElement::generator(field_);
      if (lex_.at_symbol('^')) {
        lex_.take();
        if (lex_.peek().kind != Token::kNumber) lex_.fail("expected an integer power of g");
        g = g.pow(parse_bigint(lex_.take().text));
      }
      out = have_value ? out * g : g;
      have_value = true;
    }
    if (!have_value) lex_.fail("expected a coefficient");
    return negate ? -out : out;
  }

  Lexer lex_;
  FieldPtr field_;
};

}  // namespace

HahnSeries parse_series(const std::string& text, const FieldPtr& field) {
  return SeriesParser(text, field).parse();
}

std::string format_series(const HahnSeries& f) { return f.str(); }

BigRat parse_rational(const std::string& text) {
  Lexer lex(text);
  bool neg = false;
  if (lex.at_symbol('-')) {
    lex.take();
    neg = true;
  }
  if (lex.peek().kind != Token::kNumber) lex.fail("expected a number");
  BigInt num(lex.take().text);
  BigInt den = 1;
  if (lex.at_symbol('/')) {
    lex.take();
    if (lex.peek().kind != Token::kNumber) lex.fail("expected a denominator");
    den = BigInt(lex.take().text);
    if (den == 0) lex.fail("zero denominator");
  }
  if (lex.peek().kind != Token::kEnd) lex.fail("trailing input");
  BigRat q(num, den);
  return neg ? BigRat(-q) : q;
}

ExtRational parse_ext_rational(const std::string& text) {
  Lexer probe(text);
  if (probe.at_ident("inf")) {
    probe.take();
    if (probe.peek().kind != Token::kEnd) probe.fail("trailing input");
    return ExtRational::infinity();
  }
  return ExtRational(parse_rational(text));
}

}  // namespace nonarch
