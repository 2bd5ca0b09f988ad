#pragma once

// Betti numbers of arrangement complements by iterated generic slicing.
//
// For a certified pencil l and a generic member {l = c}, the complement has
// the same Betti numbers as the slice in degrees <= n-1, and the top Betti
// number equals the total polar number: the sum, over the atypical values
// l(q) of the point strata q, of the local polar numbers. For arrangements
// the local polar number at q is |mu(ambient, q)|; curve_engine checks this
// against intersection counts with the polar curve when n = 2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/pencil.hpp"

namespace arrtop {

struct AtypicalPoint {
  Rat value;
  PointStratum stratum;
};

/// Sorted by value; one point stratum per value. Throws CertificationError
/// if the pencil is not certified for `a`.
std::vector<AtypicalPoint> atypical_values(const Arrangement& a, const Pencil& p);

/// |mu(ambient, F_q)| for the point stratum q. Throws InputError if q is
/// not a point stratum.
std::int64_t lambda_comb(const IntersectionPoset& poset, std::span<const Rat> q);
std::int64_t lambda_comb(const Arrangement& a, std::span<const Rat> q);

struct SliceLevel {
  Arrangement arrangement;  // ambient dimension n - level
  Pencil pencil;
  Rat member_value;
  std::vector<AtypicalPoint> atypical;
  std::vector<std::int64_t> lambdas;  // parallel to atypical
  std::int64_t lambda_total = 0;
};

struct SliceTrace {
  std::vector<SliceLevel> levels;  // depth equals the ambient dimension
};

struct SlicingResult {
  std::vector<std::int64_t> betti;
  SliceTrace trace;
};

SlicingResult betti_slicing(const Arrangement& a, const PencilOptions& options = {});

struct PolarReport {
  Pencil pencil;
  std::vector<AtypicalPoint> atypical;
  std::vector<std::int64_t> lambdas;
  std::int64_t lambda_total = 0;
  std::vector<std::int64_t> betti;
  std::vector<std::int64_t> cells;
  SliceTrace trace;
};

/// Top-level pencil data plus the full slicing trace. For n = 0 the pencil
/// is empty and there are no atypical values.
PolarReport polar_report(const Arrangement& a, const PencilOptions& options = {});

struct MinimalModel {
  std::vector<std::int64_t> cells;  // q-cells, q = 0..n
  std::int64_t total = 0;
  std::int64_t euler = 0;
};

MinimalModel minimal_model(const Arrangement& a, const PencilOptions& options = {});

struct SplitReport {
  bool pass = false;
  std::int64_t top_betti = 0;           // b_n(a), Möbius oracle
  std::int64_t lambda = 0;              // total polar number
  std::int64_t betti_below = 0;         // b_{n-1}(a)
  std::int64_t slice_betti_below = 0;   // b_{n-1}(slice)
  std::string detail;
};

/// Rank identities of the split sequence 0 -> H_n(X) -> H_n(X, X_c) ->
/// H_{n-1}(X_c) -> H_{n-1}(X) -> 0: b_n = lambda and b_{n-1}(slice) = b_{n-1}.
SplitReport verify_split(const Arrangement& a, const PencilOptions& options = {});

}  // namespace arrtop
