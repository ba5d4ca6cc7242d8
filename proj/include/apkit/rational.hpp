#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace apkit {

// All comparison-path arithmetic is exact.  Rat is GMP's canonical rational
// (denominator > 0, reduced); Int an arbitrary-precision integer.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);
Rat rat_of(std::uint64_t v);

// Parses "p/q" or "p".  Decimal notation is rejected on purpose: admissible
// epsilon handling depends on the input being an exact rational.
Rat rat_from_string(std::string_view text);

// Always renders as "p/q", including "0/1" and "5/1".
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);
Rat rat_abs(const Rat& r);

// Decimal rendering of a nonnegative value for text reports, e.g. "0.93069".
std::string rat_to_decimal(const Rat& r, int digits = 6);

}  // namespace apkit
