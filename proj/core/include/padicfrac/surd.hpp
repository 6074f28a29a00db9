#pragma once

#include <string>

#include "padicfrac/arith.hpp"
#include "padicfrac/prime_ctx.hpp"

namespace padicfrac {

/// (P + √D) / Q with √D taken on `branch`. D = 0 encodes the rational P / Q.
struct Surd {
  Rat P = 0;
  Rat Q = 1;
  Int D = 0;
  Branch branch = Branch::kPlus;

  static Surd rational(const Rat& x) { return Surd{x, Rat(1), Int(0), Branch::kPlus}; }
  static Surd sqrt(const Int& D, Branch branch = Branch::kPlus) {
    return Surd{Rat(0), Rat(1), D, branch};
  }

  bool is_rational() const { return D == 0; }
  /// Trace over the degree: P / Q.
  Rat center() const { return P / Q; }
  std::string str() const;
};

/// Throws std::invalid_argument if Q = 0, if D is negative or a nonzero
/// square, or if √D is not in Q_p.
void validate(const PrimeCtx& ctx, const Surd& alpha);

/// Equal value with integer P, Q and q0 | D - P^2, where Q = p^f q0 and p does
/// not divide q0. Denominators are cleared first; then, if q0 > 1, P, Q, D
/// become P q0, Q q0, D q0^2, e.g. (1 + √19)/3 -> (3 + √171)/9 at p = 5.
/// Whenever D is rescaled, the branch is re-chosen so the value is unchanged.
/// For D = 0 the result is P/Q in lowest terms, Q > 0.
Surd normalize(const PrimeCtx& ctx, const Surd& alpha);

/// Branch b' with root_{b'}(D·S^2) = S·root_b(D).
Branch scaled_branch(const PrimeCtx& ctx, const Int& D, Branch branch, const Int& scale);

}  // namespace padicfrac
