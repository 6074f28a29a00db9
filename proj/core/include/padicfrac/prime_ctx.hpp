#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "padicfrac/arith.hpp"

namespace padicfrac {

/// Which of the two p-adic square roots of D is meant by √D.
///
/// For odd p, kPlus is the root whose unit part is congruent mod p to a
/// residue in {1, ..., (p-1)/2}; for p = 2 it is the root whose unit part is
/// 1 mod 4. When p | D the rule applies to D / p^{v_p(D)} and the root is
/// scaled by p^{v_p(D)/2}.
enum class Branch { kPlus, kMinus };

inline Branch flip(Branch b) { return b == Branch::kPlus ? Branch::kMinus : Branch::kPlus; }

/// The ambient field Q_p together with a cache of Hensel-lifted square roots.
///
/// The cache only grows, and every entry (r, K) satisfies r^2 = D mod p^K.
/// Lookups and extensions take an internal lock, so one context may be shared
/// between threads; results never depend on the interleaving.
class PrimeCtx {
 public:
  /// Throws std::invalid_argument unless p is prime.
  explicit PrimeCtx(Prime p);

  PrimeCtx(const PrimeCtx& other);
  PrimeCtx& operator=(const PrimeCtx&) = delete;

  Prime p() const { return p_; }

  /// Whether √D lies in Q_p. D must be positive and not a perfect square.
  bool sqrt_in_qp(const Int& D) const;

  /// r with r^2 = D (mod p^K) on the requested branch, reduced to [0, p^K).
  /// Results at different precisions are truncations of one p-adic root.
  Int hensel_sqrt(const Int& D, Branch branch, long K) const;

  /// Number of cached (D, branch) roots; exposed for tests.
  std::size_t cache_size() const;

 private:
  Int lift_unit_root(const Int& unit, long K) const;

  Prime p_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Int, Branch>, std::pair<Int, long>> sqrt_cache_;
};

}  // namespace padicfrac
