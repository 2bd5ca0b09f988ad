#pragma once

// Dense univariate polynomials over Q and bivariate polynomials in Q[x][y].
//
// A UniPoly stores coefficients from degree 0 upward with no trailing zeros;
// the zero polynomial is the empty vector. A BiPoly stores, for each power
// of y, a UniPoly in x, again with the top y-coefficient nonzero.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/matrix.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs, char var = 'x');

  static UniPoly constant(const Rat& c, char var = 'x');
  static UniPoly monomial(const Rat& c, std::size_t k, char var = 'x');
  /// Monic linear polynomial (var - root).
  static UniPoly linear_root(const Rat& root, char var = 'x');

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  char var() const { return var_; }
  UniPoly with_var(char v) const;

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const Rat& leading() const;

  Rat operator()(const Rat& t) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);
  UniPoly operator-() const;

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }

  /// Coefficient equality; the variable tag is not compared.
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rat> coeffs_;
  char var_ = 'x';
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Division that must leave no remainder; throws std::domain_error otherwise.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);
UniPoly derivative(const UniPoly& p);
UniPoly monic(const UniPoly& p);
UniPoly pow(const UniPoly& p, unsigned k);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd_uni(const UniPoly& p, const UniPoly& q);

/// Largest monic divisor of p sharing no root with h. Throws on p = 0.
UniPoly coprime_part(const UniPoly& p, const UniPoly& h);

/// Monic squarefree part p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

/// Resultant of two univariate polynomials (Sylvester convention, p rows
/// first). The resultant with a zero polynomial is 0.
Rat resultant(const UniPoly& p, const UniPoly& q);

/// Sylvester matrix with deg(q) rows of p followed by deg(p) rows of q,
/// coefficients in descending order.
QMatrix sylvester_matrix(const UniPoly& p, const UniPoly& q);

/// Integer multiple of p with coprime integer coefficients and positive
/// leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p);

struct RationalRoots {
  std::vector<Rat> roots;  // distinct, ascending
  UniPoly rest;            // monic squarefree cofactor with no rational root
};

/// Distinct rational roots of p (p nonzero), found by Sturm-sequence
/// bisection followed by an exact test of the single admissible candidate
/// with denominator dividing the leading coefficient.
RationalRoots rational_roots(const UniPoly& p);

/// Interpolating polynomial through (xs[i], ys[i]); xs must be distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, char var = 'x');

std::string to_string(const UniPoly& p);

class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> y_coeffs);

  static BiPoly constant(const Rat& c);
  static BiPoly x();
  static BiPoly y();
  /// a*x + b*y + c.
  static BiPoly linear(const Rat& a, const Rat& b, const Rat& c);
  /// Embeds a univariate polynomial in x.
  static BiPoly from_x(const UniPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int deg_y() const { return static_cast<int>(coeffs_.size()) - 1; }
  int deg_x() const;
  int total_degree() const;

  const std::vector<UniPoly>& y_coeffs() const { return coeffs_; }
  UniPoly coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : UniPoly(); }
  /// Top y-coefficient (a UniPoly in x); zero for the zero polynomial.
  UniPoly leading_y() const { return is_zero() ? UniPoly() : coeffs_.back(); }

  Rat operator()(const Rat& x, const Rat& y) const;
  /// The univariate polynomial p(t, y) in y.
  UniPoly at_x(const Rat& t) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rat& c);
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
  friend BiPoly operator*(const Rat& c, BiPoly a) { return a *= c; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<UniPoly> coeffs_;
};

BiPoly pow(const BiPoly& p, unsigned k);
BiPoly derivative_x(const BiPoly& p);
BiPoly derivative_y(const BiPoly& p);

/// Monic gcd in Q[x] of all y-coefficients; zero for p = 0.
UniPoly content_y(const BiPoly& p);
BiPoly primitive_part_y(const BiPoly& p);

/// Scales p so its coefficients are coprime integers and the leading
/// x-coefficient of the leading y-coefficient is positive.
BiPoly normalize(const BiPoly& p);

/// Exact division in Q[x][y]; throws std::domain_error if d does not divide p.
BiPoly divide_exact(const BiPoly& p, const BiPoly& d);

/// lc_y(b)^(deg_y a - deg_y b + 1) * a mod b, computed in Q[x][y].
BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b);

/// Greatest common divisor in Q[x][y], normalized.
BiPoly gcd_bi(const BiPoly& p, const BiPoly& q);

/// Product of the distinct irreducible factors of p, normalized.
BiPoly squarefree_part(const BiPoly& p);

/// Resultant with respect to y, as a polynomial in x. Both inputs must have
/// positive y-degree; throws std::invalid_argument otherwise.
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);

/// Affine map w -> matrix * w + offset on Q^2.
struct AffineChange {
  QMatrix matrix = QMatrix::identity(2);
  std::array<Rat, 2> offset{Rat(0), Rat(0)};
};

/// The change a∘b, i.e. w -> a(b(w)).
AffineChange compose(const AffineChange& a, const AffineChange& b);

/// q(u, v) = p(change(u, v)). Throws std::invalid_argument on a singular
/// change matrix.
BiPoly substitute_affine(const BiPoly& p, const AffineChange& change);

std::string to_string(const BiPoly& p);

}  // namespace arrtop
