#pragma once

// Exact rational numbers backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrtop {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. GMP arithmetic preserves the canonical form;
/// values built from a raw numerator/denominator pair must go through
/// make_rat().
using Rat = mpq_class;

Rat make_rat(const Integer& num, const Integer& den);

/// Parses "n", "-n", "+n" or "p/q" (q nonzero). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

bool is_canonical(const Rat& r);

}  // namespace arrtop
