#include <algorithm>
#include <stdexcept>

#include "arrtop/polynomial.hpp"

namespace arrtop {

BiPoly::BiPoly(std::vector<UniPoly> y_coeffs) : coeffs_(std::move(y_coeffs)) { trim(); }

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly BiPoly::constant(const Rat& c) { return BiPoly({UniPoly::constant(c)}); }
BiPoly BiPoly::x() { return BiPoly({UniPoly::monomial(1, 1)}); }
BiPoly BiPoly::y() { return BiPoly({UniPoly(), UniPoly::constant(1)}); }

BiPoly BiPoly::linear(const Rat& a, const Rat& b, const Rat& c) {
  return BiPoly({UniPoly({c, a}), UniPoly::constant(b)});
}

BiPoly BiPoly::from_x(const UniPoly& p) { return BiPoly({p.with_var('x')}); }

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) d = std::max(d, coeffs_[j].degree() + static_cast<int>(j));
  }
  return d;
}

Rat BiPoly::operator()(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + (*it)(x);
  return acc;
}

UniPoly BiPoly::at_x(const Rat& t) const {
  std::vector<Rat> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c(t));
  return UniPoly(std::move(v), 'y');
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<UniPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& u : coeffs_) u *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& u : p.coeffs_) u = -u;
  return p;
}

BiPoly pow(const BiPoly& p, unsigned k) {
  BiPoly acc = BiPoly::constant(1);
  BiPoly base = p;
  while (k) {
    if (k & 1u) acc *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return acc;
}

BiPoly derivative_x(const BiPoly& p) {
  std::vector<UniPoly> out;
  for (const auto& c : p.y_coeffs()) out.push_back(derivative(c));
  return BiPoly(std::move(out));
}

BiPoly derivative_y(const BiPoly& p) {
  if (p.deg_y() <= 0) return BiPoly();
  std::vector<UniPoly> out;
  for (std::size_t j = 1; j < p.y_coeffs().size(); ++j) {
    out.push_back(p.y_coeffs()[j] * Rat(static_cast<unsigned long>(j)));
  }
  return BiPoly(std::move(out));
}

UniPoly content_y(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p.y_coeffs()) {
    g = gcd_uni(g, c);
    if (g.degree() == 0) break;
  }
  return g.with_var('x');
}

namespace {

BiPoly divide_by_x_poly(const BiPoly& p, const UniPoly& c) {
  std::vector<UniPoly> out;
  for (const auto& u : p.y_coeffs()) out.push_back(divide_exact(u, c));
  return BiPoly(std::move(out));
}

// c(x) * y^k
BiPoly shifted(const UniPoly& c, std::size_t k) {
  std::vector<UniPoly> v(k + 1);
  v[k] = c;
  return BiPoly(std::move(v));
}

}  // namespace

BiPoly primitive_part_y(const BiPoly& p) {
  if (p.is_zero()) return p;
  return divide_by_x_poly(p, content_y(p));
}

BiPoly normalize(const BiPoly& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& u : p.y_coeffs())
    for (const auto& c : u.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& u : p.y_coeffs())
    for (const auto& c : u.coeffs()) {
      Integer v = c.get_num() * (den / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  Rat scale = make_rat(den, g);
  if (p.leading_y().leading() < 0) scale = -scale;
  return p * scale;
}

BiPoly divide_exact(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw std::domain_error("bivariate division by zero");
  BiPoly r = p;
  BiPoly q;
  const UniPoly lc = d.leading_y();
  while (!r.is_zero() && r.deg_y() >= d.deg_y()) {
    const std::size_t k = static_cast<std::size_t>(r.deg_y() - d.deg_y());
    BiPoly term = shifted(divide_exact(r.leading_y(), lc), k);
    q += term;
    r -= term * d;
  }
  if (!r.is_zero()) throw std::domain_error("inexact bivariate division");
  return q;
}

BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.deg_y() < b.deg_y()) return a;
  const BiPoly lc = BiPoly::from_x(b.leading_y());
  int e = a.deg_y() - b.deg_y() + 1;
  BiPoly r = a;
  while (!r.is_zero() && r.deg_y() >= b.deg_y()) {
    const std::size_t k = static_cast<std::size_t>(r.deg_y() - b.deg_y());
    r = lc * r - shifted(r.leading_y(), k) * b;
    --e;
  }
  for (; e > 0; --e) r *= lc;
  return r;
}

BiPoly gcd_bi(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  const UniPoly c = gcd_uni(content_y(p), content_y(q));
  BiPoly a = primitive_part_y(p);
  BiPoly b = primitive_part_y(q);
  if (a.deg_y() < b.deg_y()) std::swap(a, b);
  // Primitive remainder sequence in Q[x][y].
  while (!b.is_zero()) {
    BiPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? BiPoly() : primitive_part_y(r);
  }
  if (a.deg_y() <= 0) a = BiPoly::constant(1);
  return normalize(BiPoly::from_x(c) * a);
}

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
  const UniPoly c = content_y(p);
  BiPoly pp = primitive_part_y(p);
  if (pp.deg_y() > 0) pp = divide_exact(pp, gcd_bi(pp, derivative_y(pp)));
  return normalize(BiPoly::from_x(squarefree_part(c)) * pp);
}

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.deg_y() <= 0 || q.deg_y() <= 0) {
    throw std::invalid_argument("resultant_y needs two polynomials of positive y-degree");
  }
  const int m = p.deg_y();
  const int n = q.deg_y();
  const int bound = std::max(p.deg_x(), 0) * n + std::max(q.deg_x(), 0) * m;
  const UniPoly lp = p.leading_y();
  const UniPoly lq = q.leading_y();
  // Evaluate at points where neither leading coefficient vanishes, so the
  // specialized Sylvester matrix keeps its shape, then interpolate.
  std::vector<Rat> xs, ys;
  long k = 0;
  while (static_cast<int>(xs.size()) <= bound) {
    Rat t = (k % 2 == 0) ? Rat(-(k / 2)) : Rat(k / 2 + 1);
    ++k;
    if (lp(t) == 0 || lq(t) == 0) continue;
    xs.push_back(t);
    ys.push_back(resultant(p.at_x(t), q.at_x(t)));
  }
  return interpolate(xs, ys, 'x');
}

AffineChange compose(const AffineChange& a, const AffineChange& b) {
  AffineChange out;
  out.matrix = a.matrix * b.matrix;
  for (std::size_t i = 0; i < 2; ++i) {
    out.offset[i] = a.offset[i] + a.matrix.at(i, 0) * b.offset[0] + a.matrix.at(i, 1) * b.offset[1];
  }
  return out;
}

BiPoly substitute_affine(const BiPoly& p, const AffineChange& change) {
  const QMatrix& m = change.matrix;
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("affine change must be 2x2");
  if (determinant(m) == 0) throw std::invalid_argument("singular affine change");
  const BiPoly X = BiPoly::linear(m.at(0, 0), m.at(0, 1), change.offset[0]);
  const BiPoly Y = BiPoly::linear(m.at(1, 0), m.at(1, 1), change.offset[1]);
  BiPoly acc;
  const auto& ys = p.y_coeffs();
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
    BiPoly inner;
    const auto& xs = it->coeffs();
    for (auto jt = xs.rbegin(); jt != xs.rend(); ++jt) inner = inner * X + BiPoly::constant(*jt);
    acc = acc * Y + inner;
  }
  return acc;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int j = p.deg_y(); j >= 0; --j) {
    const UniPoly& c = p.y_coeffs()[j];
    for (int i = c.degree(); i >= 0; --i) {
      const Rat& a = c.coeffs()[i];
      if (a == 0) continue;
      Rat mag = abs(a);
      if (s.empty()) {
        if (a < 0) s += "-";
      } else {
        s += a < 0 ? " - " : " + ";
      }
      std::string mono;
      if (i > 0) mono += i > 1 ? "x^" + std::to_string(i) : "x";
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j > 1 ? "y^" + std::to_string(j) : "y";
      }
      if (mono.empty()) {
        s += to_string(mag);
      } else if (mag == 1) {
        s += mono;
      } else {
        s += to_string(mag) + "*" + mono;
      }
    }
  }
  return s;
}

}  // namespace arrtop
