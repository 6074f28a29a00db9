#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <string>

namespace padicfrac {

using Int = mpz_class;
using Rat = mpq_class;

/// Prime moduli are machine words; everything derived from them is a bignum.
using Prime = unsigned long;

/// Sentinel for v_p(0).
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

int sign(const Int& x);
int sign(const Rat& x);

/// p-adic valuation of a nonzero integer; kInfiniteValuation for 0.
long vp(const Int& x, Prime p);
/// v_p(num) - v_p(den); kInfiniteValuation for 0.
long vp(const Rat& x, Prime p);

/// Removes every factor p from x in place and returns how many were removed.
long strip(Int& x, Prime p);

Int pow_p(Prime p, unsigned long e);

/// Representative of x mod m (m = p^k): balanced, i.e. in [-(m-1)/2, (m-1)/2],
/// for odd p; in [0, m) for p = 2.
Int residue(const Int& x, const Int& m, Prime p);

/// Nearest integer to num/den (den != 0); exact ties go away from zero.
Int round_nearest(const Int& num, const Int& den);
Int round_nearest(const Rat& x);

/// Smallest k >= 0 with 4^k >= x (x >= 1).
long ceil_log4(const Int& x);

bool is_perfect_square(const Int& x);
bool is_prime(Prime p);

/// Canonical form with positive denominator and gcd 1.
Rat make_rat(const Int& num, const Int& den);

/// Parses "a", "-a", "a/b".
std::optional<Rat> parse_rat(const std::string& text);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

}  // namespace padicfrac
