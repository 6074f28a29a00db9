#pragma once

#include <string>

#include "padicfrac/arith.hpp"

namespace padicfrac {

/// An element of Z[1/p] held as unit / p^exp.
///
/// Canonical form: exp == 0, or exp > 0 and p does not divide unit. Zero is
/// (0, 0). Partial quotients and the convergent numerators/denominators are
/// all of this shape, so arithmetic never needs a general gcd.
class ScaledInt {
 public:
  ScaledInt() = default;
  ScaledInt(Prime p, Int unit, long exp = 0);
  /// Throws std::domain_error unless the denominator of x is a power of p.
  static ScaledInt from_rat(Prime p, const Rat& x);

  Prime prime() const { return p_; }
  const Int& unit() const { return unit_; }
  long exp() const { return exp_; }

  bool is_zero() const { return unit_ == 0; }
  /// v_p of the value; kInfiniteValuation for zero.
  long valuation() const;
  Rat to_rat() const;
  /// unit * p^(exp_target - exp); requires exp_target >= exp.
  Int scaled_to(long exp_target) const;

  ScaledInt operator-() const;
  friend ScaledInt operator+(const ScaledInt& a, const ScaledInt& b);
  friend ScaledInt operator-(const ScaledInt& a, const ScaledInt& b);
  friend ScaledInt operator*(const ScaledInt& a, const ScaledInt& b);
  friend bool operator==(const ScaledInt& a, const ScaledInt& b) {
    return a.exp_ == b.exp_ && a.unit_ == b.unit_;
  }

  /// "u" or "u/p^e" written out, e.g. "-10/71", "8/25".
  std::string str() const;

 private:
  void canonicalize();

  Prime p_ = 2;
  Int unit_ = 0;
  long exp_ = 0;
};

using PartialQuotient = ScaledInt;

}  // namespace padicfrac
