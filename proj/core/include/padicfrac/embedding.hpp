#pragma once

#include <vector>

#include "padicfrac/arith.hpp"
#include "padicfrac/prime_ctx.hpp"
#include "padicfrac/scaled_int.hpp"

namespace padicfrac {

/// Integer parts of s(α) and t(α): s = s_num / p^e, t = t_num / p^e with
/// e = max(0, -v_p(α)).
struct Truncations {
  long valuation = 0;
  long e = 0;
  Int s_num;
  Int t_num;

  ScaledInt s(Prime p) const { return ScaledInt(p, s_num, e); }
  ScaledInt t(Prime p) const { return ScaledInt(p, t_num, e); }
};

/// Q(√D) → Q_p for one (D, branch), evaluated on integer pairs (P, Q)
/// meaning (P + √D)/Q, or P/Q when D = 0.
///
/// Rationals are handled with exact modular arithmetic. Surds use a
/// Hensel root at precision K (initially 32 digits) that doubles whenever a
/// request needs more digits than are known; this is invisible to callers.
class Embedding {
 public:
  Embedding(const PrimeCtx& ctx, Int D, Branch branch = Branch::kPlus);

  Prime p() const { return p_; }
  const Int& D() const { return D_; }
  bool rational() const { return D_ == 0; }
  long precision() const { return K_; }

  /// v_p(α); α must be nonzero.
  long valuation(const Int& P, const Int& Q);

  /// Representative of α·p^(-lo) mod p^len (balanced for odd p).
  /// Requires lo <= v_p(α) so that α·p^(-lo) is a p-adic integer.
  Int window(const Int& P, const Int& Q, long lo, long len);

  Truncations truncations(const Int& P, const Int& Q);

  const Int& power(long e);

 private:
  void grow(long K);

  const PrimeCtx* ctx_;
  Prime p_;
  Int D_;
  Branch branch_;
  long K_ = 0;
  Int root_;
  std::vector<Int> powers_;
};

/// Floor functions on integer state (P, Q). Each takes the truncations of α
/// so callers can share one digit computation between several candidates.
ScaledInt sbar(Prime p, const Int& P, const Int& Q, const Truncations& tr);
ScaledInt tbar(Prime p, const Int& P, const Int& Q, const Truncations& tr);
ScaledInt s1(Prime p, const Int& P, const Int& Q, const Truncations& tr);
ScaledInt t1(Prime p, const Int& P, const Int& Q, const Truncations& tr);

}  // namespace padicfrac
