#pragma once

// Generic pencils of hyperplanes {l = t} for an arrangement, with exact
// certificates of genericity.
//
// A direction l is certified when
//   * l is nonconstant on every flat of dimension >= 1 (equivalently,
//     {l = 0} at infinity is transversal to the projectivized direction
//     spaces of all flats, so the pencil has no singularities in the axis);
//   * l takes pairwise distinct values on the point strata, so every member
//     of the pencil contains at most one point stratum.
// A member value c is certified when it is not the image of a point stratum
// and the slice {l = c} preserves the flats of dimension >= 1.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

struct Pencil {
  std::vector<Rat> direction;  // first nonzero entry is 1

  /// Canonicalizes; throws InputError on the zero form.
  static Pencil make(std::vector<Rat> direction);
  Rat operator()(std::span<const Rat> point) const;

  friend bool operator==(const Pencil&, const Pencil&) = default;
};

struct GenericityCertificate {
  std::vector<Rat> direction;

  bool direction_ok = false;
  /// Closure set of the first flat (poset order) on which l is constant.
  std::optional<std::vector<std::size_t>> direction_witness;

  bool separation_ok = false;
  /// First pair of point strata (lexicographic order) with equal l-values.
  std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> separation_witness;

  std::optional<Rat> member_value;
  bool member_ok = false;
  std::string member_witness;  // reason a member value was rejected

  bool direction_valid() const { return direction_ok && separation_ok; }
  bool member_valid() const { return direction_valid() && member_value.has_value() && member_ok; }

  friend bool operator==(const GenericityCertificate&, const GenericityCertificate&) = default;
};

struct PencilOptions {
  std::size_t budget = 10000;  // candidates examined before giving up
};

GenericityCertificate certify_direction(const IntersectionPoset& poset, std::span<const Rat> l);
GenericityCertificate certify_direction(const Arrangement& a, std::span<const Rat> l);

/// Recomputes every field of the certificate from scratch and compares.
bool recheck_certificate(const Arrangement& a, const GenericityCertificate& cert);

/// Integer directions ordered by max-norm, then lexicographically, keeping
/// only primitive vectors whose first nonzero entry is positive. Each is
/// returned scaled to first nonzero entry 1.
class DirectionEnumerator {
 public:
  explicit DirectionEnumerator(std::size_t dim);
  std::optional<std::vector<Rat>> next();

 private:
  bool advance();

  std::size_t dim_;
  long norm_ = 1;
  std::vector<long> current_;
  bool started_ = false;
};

/// Member values 0, 1, -1, 2, -2, ...
Rat member_candidate(std::size_t k);

struct CertifiedPencil {
  Pencil pencil;
  GenericityCertificate certificate;
  std::size_t attempts = 0;
};

/// First certified direction in enumeration order. Throws CertificationError
/// when the budget is exhausted or the ambient dimension is 0.
CertifiedPencil find_generic_direction(const Arrangement& a, const PencilOptions& options = {});

/// The first `count` certified directions in enumeration order.
std::vector<CertifiedPencil> certified_directions(const Arrangement& a, std::size_t count,
                                                  const PencilOptions& options = {});

struct MemberChoice {
  Rat value;
  GenericityCertificate certificate;  // with member fields filled in
  Arrangement slice;
};

/// First value in member_candidate order that avoids the atypical values and
/// passes the slice verification. Throws CertificationError if the pencil is
/// not certified or the budget runs out.
MemberChoice choose_generic_value(const Arrangement& a, const Pencil& p, const PencilOptions& options = {});

}  // namespace arrtop
