#pragma once

// Deterministic arrangement families used by `arrtop gen` and the test
// corpus.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"

namespace arrtop::corpus {

/// Coordinate hyperplanes x_i = 0 in C^n.
Arrangement boolean(std::size_t n);

/// x_i = x_j for i < j in C^n.
Arrangement braid(std::size_t n);

/// k hyperplanes in general position in C^n. Hyperplane i is
///     sum_j t^j x_{j+1} = t^n,  t = i + 1,
/// i.e. a row of the moment curve: any n+1 augmented rows form a nonsingular
/// Vandermonde matrix, so no n+1 hyperplanes meet and any m <= n meet in
/// codimension m.
Arrangement generic(std::size_t n, std::size_t k);

/// k distinct lines through the origin of C^2: x + i*y = 0, i = 0..k-1.
Arrangement concurrent(std::size_t k);

/// k parallel hyperplanes x_1 = i, i = 0..k-1, in C^n.
Arrangement parallel(std::size_t k, std::size_t n = 2);

/// k distinct hyperplanes in C^n with integer coefficients in [-2, 2],
/// drawn from a seeded mt19937_64 (platform-independent sampling).
Arrangement random(std::size_t n, std::size_t k, std::uint64_t seed);

struct Named {
  std::string name;
  Arrangement arrangement;
};

/// The acceptance corpus: Boolean and braid (n <= 4), generic (n <= 3,
/// k <= 6), concurrent and parallel lines (k <= 6), and 50 seeded random
/// arrangements (n <= 3, k <= 6).
std::vector<Named> standard_corpus();

/// The 50 seeded random arrangements of the standard corpus.
std::vector<Named> random_corpus(std::size_t count = 50, std::uint64_t seed = 20031);

}  // namespace arrtop::corpus
