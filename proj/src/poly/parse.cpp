#include <cctype>
#include <string>

#include "bsw/error.hpp"
#include "bsw/poly/polynomial.hpp"

namespace bsw::poly {

namespace {

// Recursive descent over
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('-'|'+') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, const std::map<std::string, Polynomial>* bindings)
      : text_(text), ring_(ring), bindings_(bindings) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at column " + std::to_string(pos_ + 1), 1, static_cast<int>(pos_ + 1));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc = acc.scaled(Rational(1) / d.leading_coeff());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto idx = ring_->index_of(name)) return Polynomial::variable(ring_, *idx);
      if (bindings_) {
        auto it = bindings_->find(name);
        if (it != bindings_->end()) return it->second;
      }
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // Integers and finite decimals, both read exactly.
  Polynomial number() {
    const std::size_t start = pos_;
    std::string int_part, frac_part;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      int_part += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        frac_part += text_[pos_++];
    }
    if (int_part.empty() && frac_part.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    mpz_class num(int_part.empty() ? "0" : int_part);
    mpz_class den = 1;
    for (char d : frac_part) {
      num = num * 10 + (d - '0');
      den *= 10;
    }
    Rational q(num, den);
    q.canonicalize();
    return Polynomial::constant(ring_, q);
  }

  std::string_view text_;
  const Ring& ring_;
  const std::map<std::string, Polynomial>* bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            const std::map<std::string, Polynomial>* bindings) {
  if (!ring) throw StructuralError("parse_polynomial needs a ring");
  return Parser(text, ring, bindings).parse();
}

}  // namespace bsw::poly
