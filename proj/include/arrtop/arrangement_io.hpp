#pragma once

// Arrangement text format (one arrangement per file):
//
//     # comment lines and blank lines are ignored
//     dim 2
//     1 0 0          <- a_1 ... a_n b, the hyperplane a . x = b
//     0 1 1/2
//
// Numbers are integers or p/q rationals. The `dim` line must come first.

#include <string>
#include <string_view>

#include "arrtop/arrangement.hpp"

namespace arrtop {

/// Throws InputError with a "line N: ..." message on malformed input.
Arrangement parse_arrangement(std::string_view text, DuplicatePolicy policy = DuplicatePolicy::kReject);

/// Canonical text form; parse_arrangement(print_arrangement(a)) == a.
std::string print_arrangement(const Arrangement& a);

/// FNV-1a 64-bit digest of the canonical text, as 16 hex digits.
std::string arrangement_digest(const Arrangement& a);

}  // namespace arrtop
