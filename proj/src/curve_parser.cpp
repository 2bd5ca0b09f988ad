#include "arrtop/curve_parser.hpp"

#include <cctype>
#include <string>

#include "arrtop/error.hpp"

namespace arrtop {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly parse() {
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("curve expression, column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        BiPoly d = unary();
        if (d.is_zero()) fail("division by zero");
        if (d.total_degree() != 0) fail("division by a non-constant");
        acc *= 1 / d.coeff(0).coeff(0);
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  BiPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return BiPoly::constant(parse_rat(s_.substr(start, pos_ - start)));
    }
    if (accept('(')) {
      BiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_curve(std::string_view text) { return Parser(text).parse(); }

}  // namespace arrtop
