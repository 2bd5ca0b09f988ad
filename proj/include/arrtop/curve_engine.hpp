#pragma once

// Direct polar-curve computation for plane curves V = {f = 0} in C^2.
//
// Coordinates are changed so the pencil direction l becomes the first
// coordinate u; the polar curve Γ(l, f) is then the part of {∂f/∂v = 0}
// not contained in the critical set {∂f/∂u = ∂f/∂v = 0}. The polar number
// at a value a is the drop
//     N(c) - N(a),
// where N(t) counts, with multiplicity, the roots of g(t, v) that are not
// roots of f(t, v), and c is a generic value.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/pencil.hpp"
#include "arrtop/polar.hpp"
#include "arrtop/polynomial.hpp"

namespace arrtop {

using Direction2 = std::array<Rat, 2>;

/// A nonzero squarefree bivariate polynomial.
class PlaneCurve {
 public:
  /// Throws InputError if f is zero or has a repeated factor.
  explicit PlaneCurve(BiPoly f);
  const BiPoly& f() const { return f_; }

 private:
  BiPoly f_;
};

/// Product of the defining affine forms of a plane arrangement (the constant
/// 1 for the empty arrangement). Throws InputError unless dim == 2.
BiPoly defining_polynomial(const Arrangement& a);

/// Invertible affine change (u, v) -> (x, y) with l(x(u, v), y(u, v)) = u.
AffineChange normalizing_change(const Direction2& l);

struct PolarCycle {
  Direction2 direction;
  AffineChange change;
  BiPoly f;  // the curve in (u, v) coordinates
  BiPoly g;  // reduced polar curve in (u, v) coordinates; constant 1 if empty
  int deg_y = 0;
};

struct PolarCycleResult {
  std::optional<PolarCycle> cycle;
  std::string rejection;  // names the failed certificate condition
};

/// Computes Γ(l, f) and checks its certificate: the member {l = 0} at
/// infinity misses V (leading v-coefficient of f constant), the polar curve
/// is reduced, and its leading v-coefficient is a nonzero constant.
/// Throws InputError for l = 0.
PolarCycleResult polar_cycle(const PlaneCurve& curve, const Direction2& l);

/// Number of roots of g(t0, v), with multiplicity, off {f(t0, v) = 0}.
/// Throws CertificationError if g(t0, v) vanishes identically.
std::size_t fiber_count(const BiPoly& f, const BiPoly& g, const Rat& t0);

struct Candidates {
  std::vector<Rat> values;       // rational roots of the squarefree resultant
  std::vector<Rat> degree_drop;  // rational roots of the leading coefficient of g
  UniPoly resultant;             // Res_v(g, f); zero when Γ is empty
};

/// Throws IrrationalError if the resultant has a factor without rational
/// roots, reporting that factor.
Candidates atypical_candidates(const BiPoly& f, const BiPoly& g);

struct EngineValue {
  Rat value;
  std::size_t count = 0;
  std::int64_t lambda = 0;
};

struct EngineReport {
  Direction2 direction;
  std::string polar_curve;  // g in (u, v) coordinates, printed with x = u, y = v
  int polar_degree = 0;
  Rat generic_value;
  std::size_t generic_count = 0;
  std::vector<EngineValue> atypical;     // lambda > 0 only, ascending
  std::vector<EngineValue> degree_drop;  // reported, excluded from lambda
  std::int64_t lambda_total = 0;
};

/// Throws CertificationError if the polar cycle is rejected for l.
EngineReport lambda_engine(const PlaneCurve& curve, const Direction2& l);

/// First direction in DirectionEnumerator order whose polar cycle is
/// certified for the curve.
Direction2 find_curve_direction(const PlaneCurve& curve, const PencilOptions& options = {});

/// Directions certified both for the arrangement (pencil module) and for the
/// polar engine, in enumeration order.
std::vector<Direction2> engine_directions(const Arrangement& a, std::size_t count,
                                          const PencilOptions& options = {});

struct ArrangementCheck {
  bool pass = false;
  std::vector<std::string> failures;
  EngineReport engine;
  std::vector<AtypicalPoint> combinatorial;
  std::vector<std::int64_t> combinatorial_lambdas;
  std::int64_t betti_top = 0;  // b_2 from the Möbius oracle
};

/// Compares the engine with the combinatorial polar data for a plane
/// arrangement and certified pencil. Throws InputError unless dim == 2;
/// mismatches are reported as failures, not exceptions.
ArrangementCheck check_arrangement(const Arrangement& a, const Pencil& p);

}  // namespace arrtop
