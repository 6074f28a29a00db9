#pragma once

#include <string>
#include <vector>

#include "padicfrac/algorithm.hpp"
#include "padicfrac/arith.hpp"
#include "padicfrac/expansion.hpp"
#include "padicfrac/surd.hpp"

// Slow reference implementations used to cross-check the engine. Nothing
// here calls into the floor functions, the embedding or the expansion loop;
// only the plain arithmetic helpers and the result types are shared.

namespace padicfrac::oracle {

/// Digits a_v..a_K of x (v = v_p(x)) by repeated balanced residues of
/// num·den^{-1} mod p. Empty when K < v. x must be nonzero.
std::vector<long> rational_digits(const Rat& x, Prime p, long K);

/// A_N / B_N for [b_0, ..., b_N], evaluated right to left.
/// Throws std::domain_error when a tail evaluates to zero (malformed CF)
/// and std::invalid_argument for an empty list.
Rat reconstruct_rational(const std::vector<PartialQuotient>& quotients);

struct Witness {
  long index = -1;
  std::string values;
};

struct Check {
  std::string name;
  bool passed = true;
  bool informational = false;  // reported but never fails the audit
  long violation_count = 0;
  std::vector<Witness> witnesses;  // first few violations, or the observed values
};

struct AuditReport {
  std::string subject;  // "<alg> p=<p> <input>"
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(const std::string& name) const;
};

/// Re-runs `alg` on α with an independent loop over x + y√D and confirms the
/// reported pre-period and period: quotients b_0..b_{pre+period-1} match,
/// α_pre = α_{pre+period} with matching phase, the next period repeats the
/// quotients, and no earlier recurrence exists. Throws std::invalid_argument
/// unless result.kind is Periodic.
AuditReport verify_period(Prime p, const Surd& alpha, const AlgorithmId& alg, const ExpansionResult& result);

/// Bounds that apply to (p, alg, α), evaluated on result.diagnostics:
///   q_bound_p23        new/neww, p in {2, 3}, D != 0:
///                      |Q_n| <= max(|Q_0|, |Q_1|, p^2|D|/4 + 1)
///   q_bound_block      modified, p <= 7, D != 0: with
///                      M = max(|Q_0|, p^2|D|/4 + 1, 4(p^2+1)/3),
///                      |Q_n| <= p^2 M/4 + 1
///   contraction_P      new/neww, D = 0: |P_{n+2}| < |P_{n+1}|/2
///   contraction_Q      new/neww, D = 0: |Q_{n+2}| < |Q_n|/4
///   step_bound         new/neww, D = 0, finite: steps <= 2 ceil(log4 |Q_0|) + 2
///   step_bound_ln      same against ceil(ln |Q_0|) + 2; informational
///   valuation_pairs    new/neww: v_p(b_n) + v_p(b_{n+1}) < 0 for n >= 1
AuditReport audit_bounds(const Surd& alpha, const AlgorithmId& alg, const ExpansionResult& result);

}  // namespace padicfrac::oracle
