#include "arrtop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace arrtop {

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(text, num);
  } else {
    auto d = text.substr(slash + 1);
    ok = parse_integer(text.substr(0, slash), num) && !d.empty() &&
         d[0] != '-' && d[0] != '+' && parse_integer(d, den);
  }
  if (!ok) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_canonical(const Rat& r) {
  if (sgn(r.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1;
}

}  // namespace arrtop
