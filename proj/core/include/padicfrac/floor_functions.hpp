#pragma once

#include <vector>

#include "padicfrac/arith.hpp"
#include "padicfrac/prime_ctx.hpp"
#include "padicfrac/scaled_int.hpp"
#include "padicfrac/surd.hpp"

namespace padicfrac {

/// v_p(α); kInfiniteValuation for α = 0.
long vp(const PrimeCtx& ctx, const Surd& alpha);

/// Digits a_from..a_to of the p-adic expansion of α, balanced for odd p and
/// in {0, 1} for p = 2. Indices below v_p(α) yield zeros.
std::vector<long> digits(const PrimeCtx& ctx, const Surd& alpha, long from, long to);

/// s(α) = Σ_{n<=0} a_n p^n and t(α) = Σ_{n<=-1} a_n p^n; both 0 for α = 0.
Rat s(const PrimeCtx& ctx, const Surd& alpha);
Rat t(const PrimeCtx& ctx, const Surd& alpha);

/// s(α) and t(α) moved by multiples of p (resp. 1) as close as possible to
/// P/Q, ties away from zero.
PartialQuotient sbar(const PrimeCtx& ctx, const Surd& alpha);
PartialQuotient tbar(const PrimeCtx& ctx, const Surd& alpha);

/// Browkin's s₁/t₁: of s(α) and s(α) - p·sign(s(α)) (resp. t, t - sign t),
/// the one nearer P/Q; ties keep s(α) (resp. t(α)). Quadratic α only.
PartialQuotient s1(const PrimeCtx& ctx, const Surd& alpha);
PartialQuotient t1(const PrimeCtx& ctx, const Surd& alpha);

}  // namespace padicfrac
