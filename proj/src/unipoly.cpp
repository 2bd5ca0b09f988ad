#include <algorithm>
#include <stdexcept>

#include "arrtop/polynomial.hpp"

namespace arrtop {

UniPoly::UniPoly(std::vector<Rat> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) {
  trim();
}

UniPoly UniPoly::constant(const Rat& c, char var) { return UniPoly({c}, var); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t k, char var) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::linear_root(const Rat& root, char var) { return UniPoly({-root, Rat(1)}, var); }

UniPoly UniPoly::with_var(char v) const {
  UniPoly p = *this;
  p.var_ = v;
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat UniPoly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& a : p.coeffs_) a = -a;
  return p;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly({}, a.var()), a};
  std::vector<Rat> quot(da - db + 1);
  const Rat& lb = b.leading();
  for (int k = da; k >= db; --k) {
    if (rem[k] == 0) continue;
    Rat c = rem[k] / lb;
    quot[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
  }
  return {UniPoly(std::move(quot), a.var()), UniPoly(std::move(rem), a.var())};
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() <= 0) return UniPoly({}, p.var());
  std::vector<Rat> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d), p.var());
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  Rat inv = 1 / p.leading();
  return p * inv;
}

UniPoly pow(const UniPoly& p, unsigned k) {
  UniPoly acc = UniPoly::constant(1, p.var());
  UniPoly base = p;
  while (k) {
    if (k & 1u) acc *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return acc;
}

UniPoly gcd_uni(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a).with_var(p.var());
}

UniPoly coprime_part(const UniPoly& p, const UniPoly& h) {
  if (p.is_zero()) throw std::invalid_argument("coprime_part of the zero polynomial");
  UniPoly out = p;
  UniPoly d = gcd_uni(out, h);
  while (d.degree() > 0) {
    out = divide_exact(out, d);
    d = gcd_uni(out, h);
  }
  return monic(out);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(divide_exact(p, gcd_uni(p, derivative(p))));
}

Rat resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  UniPoly a = p, b = q;
  Rat acc = 1;
  for (;;) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      Rat out = 1;
      for (int i = 0; i < m; ++i) out *= b.leading();
      return acc * out;
    }
    if (m == 0) {
      Rat out = 1;
      for (int i = 0; i < n; ++i) out *= a.leading();
      return acc * out;
    }
    UniPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    const int rd = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    for (int i = 0; i < m - rd; ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

QMatrix sylvester_matrix(const UniPoly& p, const UniPoly& q) {
  const int m = std::max(p.degree(), 0);
  const int n = std::max(q.degree(), 0);
  const std::size_t size = static_cast<std::size_t>(m + n);
  QMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s.at(r, r + k) = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s.at(n + r, r + k) = q.coeff(n - k);
  return s;
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, derivative(p)};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

// Sign variations of the chain at t, zeros dropped (equals the count just
// to the right of t for a squarefree chain).
int variations(const std::vector<UniPoly>& chain, const Rat& t) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

struct Interval {
  Rat lo, hi;  // half-open (lo, hi]
  int vlo, vhi;
};

}  // namespace

RationalRoots rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  RationalRoots out;
  UniPoly sqf = squarefree_part(p);
  if (sqf.degree() <= 0) {
    out.rest = sqf;
    return out;
  }
  auto ints = primitive_integer_coeffs(sqf);
  Integer lead = ints.back();  // positive
  Rat bound = 0;
  for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
    Rat ratio = make_rat(abs(ints[i]), lead);
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  const auto chain = sturm_chain(sqf);
  std::vector<Interval> stack{{-bound, bound, variations(chain, -bound), variations(chain, bound)}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int count = iv.vlo - iv.vhi;
    if (count <= 0) continue;
    if (count == 1 && (iv.hi - iv.lo) * lead < 1) {
      // At most one multiple of 1/lead lies in (lo, hi].
      Rat scaled = iv.hi * lead;
      Integer m;
      mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      Rat cand = make_rat(m, lead);
      if (cand > iv.lo && sqf(cand) == 0) out.roots.push_back(cand);
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    int vmid = variations(chain, mid);
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(out.roots.begin(), out.roots.end());
  UniPoly rest = sqf;
  for (const auto& r : out.roots) rest = divide_exact(rest, UniPoly::linear_root(r, p.var()));
  out.rest = monic(rest);
  return out;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, char var) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rat dx = xs[i] - xs[i - level];
      if (dx == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  UniPoly acc({}, var);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UniPoly::linear_root(xs[i], var) + UniPoly::constant(dd[i], var);
  }
  return acc.with_var(var);
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeffs()[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (!unit || k == 0) s += to_string(mag);
    if (k > 0) {
      if (!unit) s += "*";
      s += p.var();
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace arrtop
