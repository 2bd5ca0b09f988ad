#pragma once

// Affine hyperplane arrangements over Q, their intersection posets and the
// combinatorial (Möbius / Orlik–Solomon) Betti numbers of the complement.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrtop/matrix.hpp"
#include "arrtop/rational.hpp"

namespace arrtop {

/// The hyperplane {x : normal . x = offset}, scaled so that the first
/// nonzero entry of the normal is 1.
struct Hyperplane {
  std::vector<Rat> normal;
  Rat offset;

  /// Canonicalizes; throws InputError on a zero normal.
  static Hyperplane make(std::vector<Rat> normal, Rat offset);

  Rat evaluate(std::span<const Rat> point) const;  // normal . point - offset
  bool contains(std::span<const Rat> point) const { return evaluate(point) == 0; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend bool operator<(const Hyperplane& a, const Hyperplane& b);
};

enum class DuplicatePolicy { kReject, kDedupe };

class Arrangement {
 public:
  Arrangement() = default;
  /// Canonicalizes every hyperplane. Throws InputError on a dimension
  /// mismatch, a zero normal, or (under kReject) a repeated hyperplane.
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes,
              DuplicatePolicy policy = DuplicatePolicy::kReject);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t j) const { return hyperplanes_[j]; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Hyperplane> hyperplanes_;
};

/// A nonempty intersection of hyperplanes.
struct Flat {
  QMatrix equations;                  // RREF of the augmented system [A | b], no zero rows
  std::size_t dim = 0;                // ambient dim - rank
  std::vector<std::size_t> closure;   // sorted indices j with H_j containing the flat
  std::vector<Rat> witness;           // a rational point on the flat

  std::size_t codim() const { return equations.rows(); }
  /// True if the linear form is constant on the flat.
  bool form_is_constant(std::span<const Rat> form) const;
};

/// Flats ordered by reverse inclusion. flats[0] is the ambient space; flats
/// are sorted by codimension and then by closure set.
struct IntersectionPoset {
  std::size_t ambient_dim = 0;
  std::size_t hyperplane_count = 0;
  std::vector<Flat> flats;
  std::vector<std::int64_t> mobius;  // mu(ambient, F), parallel to flats

  /// flats[i] <= flats[j], i.e. flats[i] contains flats[j].
  bool leq(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> find(const std::vector<std::size_t>& closure) const;
};

IntersectionPoset build_poset(const Arrangement& a);

/// First violation of the Möbius recursion or of the sign rule
/// mu(F) * (-1)^codim(F) >= 1, described in words; nullopt if the cache is
/// consistent.
std::optional<std::string> check_mobius(const IntersectionPoset& poset);

/// Coefficients of sum_F |mu(F)| t^codim(F), degrees 0..n.
std::vector<std::int64_t> poincare_polynomial(const IntersectionPoset& poset);

/// b_q = sum over flats of codimension q of |mu|, q = 0..n.
std::vector<std::int64_t> betti_os(const Arrangement& a);
std::vector<std::int64_t> betti_os(const IntersectionPoset& poset);

struct PointStratum {
  std::vector<Rat> point;
  std::vector<std::size_t> closure;
  std::size_t flat = 0;  // index into the poset
};

/// Dimension-0 flats, sorted lexicographically by coordinates.
std::vector<PointStratum> point_strata(const IntersectionPoset& poset);
std::vector<PointStratum> point_strata(const Arrangement& a);

/// Outcome of slicing by {l = c}: either the slice arrangement or the reason
/// the slice is not generic.
struct SliceResult {
  std::optional<Arrangement> slice;
  std::string failure;
};

/// Pulls the arrangement back along an affine parametrization of {l = c}
/// and verifies that F -> F ∩ {l = c} is a codimension-preserving bijection
/// from flats of dimension >= 1 onto the flats of the slice.
SliceResult try_restrict_generic(const Arrangement& a, std::span<const Rat> l, const Rat& c);

/// As try_restrict_generic, throwing CertificationError on failure.
Arrangement restrict_generic(const Arrangement& a, std::span<const Rat> l, const Rat& c);

/// The induced arrangement on H_j (in coordinates of H_j), deduplicated.
Arrangement restrict_to_member(const Arrangement& a, std::size_t j);

/// The arrangement with H_j removed.
Arrangement delete_member(const Arrangement& a, std::size_t j);

std::string to_string(std::span<const Rat> point);

}  // namespace arrtop
