#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace mono {

using Rat = mpq_class;
using Int = mpz_class;

// Canonical "p/q" (or "p" when q == 1). Round-trips exactly through rat_from_string.
std::string rat_to_string(const Rat& x);

// Accepts "p", "p/q", optional leading '-'. Throws BadParameters on malformed input
// or zero denominator.
Rat rat_from_string(const std::string& s);

// Bit size of numerator plus denominator; the pivot-selection metric.
std::size_t rat_bit_size(const Rat& x);

inline int rat_sign(const Rat& x) { return sgn(x); }

// floor(log2(|x|)) style bound helpers for interval arithmetic.
Rat rat_abs(const Rat& x);

// 2^-k as an exact rational.
Rat pow2_neg(unsigned long k);

}  // namespace mono
