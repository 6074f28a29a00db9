#pragma once

#include <vector>

#include "padicfrac/algorithm.hpp"
#include "padicfrac/embedding.hpp"
#include "padicfrac/prime_ctx.hpp"
#include "padicfrac/scaled_int.hpp"
#include "padicfrac/surd.hpp"

namespace padicfrac {

/// Complete quotient α_n = (P_n + √D)/Q_n (or P_n/Q_n when D = 0) plus the
/// two most recent convergent pairs. Before step n the pairs hold
/// (A_{n-2}, A_{n-1}) and (B_{n-2}, B_{n-1}); the seeds are A_{-2} = 0,
/// A_{-1} = 1, B_{-2} = 1, B_{-1} = 0.
struct ExpansionState {
  long n = 0;
  Int P;
  Int Q;
  ScaledInt A_prev, A_cur;
  ScaledInt B_prev, B_cur;
};

/// State for α_0. `alpha` must already be normalized (integer P, Q).
ExpansionState initial_state(Prime p, const Surd& alpha);

/// Moves from α_n to α_{n+1} = 1/(α_n - b_n) and extends the convergents.
///
/// D != 0: P' = b Q - P, Q' = (D - P'^2) / Q.
/// D == 0: with e = -v_p(α_n), q = Q / p^e if e >= 0 else Q,
///         P' = sign(P - b Q)·q, Q' = |P - b Q| / p^max(e, 0).
/// Throws std::logic_error when a division that must be exact is not, and
/// std::domain_error when b_n = α_n (the expansion is finite there).
ExpansionState step_update(Prime p, const Int& D, const ExpansionState& state, const PartialQuotient& b);

/// b_n under `alg` for α_n = (P + √D)/Q. `tr` are the truncations of α_n.
PartialQuotient choose_quotient(const AlgorithmId& alg, Prime p, const Int& P, const Int& Q, long n,
                                const Truncations& tr);
/// Convenience overload on a surd; normalizes first.
PartialQuotient choose_quotient(const PrimeCtx& ctx, const AlgorithmId& alg, const Surd& alpha, long n);

struct StepDiagnostics {
  long n = 0;
  long vp_alpha = 0;  // v_p(α_n)
  long vp_b = 0;      // v_p(b_n); kInfiniteValuation when b_n = 0
  Int P;              // P_n
  Int Q;              // Q_n
  long vp_B = 0;      // v_p(B_n)
};

enum class ResultKind { kFinite, kPeriodic, kTruncated };

const char* to_string(ResultKind kind);

struct ExpansionResult {
  ResultKind kind = ResultKind::kTruncated;
  Prime p = 2;
  AlgorithmId algorithm;
  Surd start;  // normalized input
  /// Finite: b_0..b_N with α_N = b_N. Periodic: b_0..b_{pre+period-1}.
  /// Truncated: the first max_steps quotients.
  std::vector<PartialQuotient> quotients;
  long preperiod = 0;
  long period = 0;
  std::vector<StepDiagnostics> diagnostics;  // one entry per quotient

  std::vector<PartialQuotient> preperiod_part() const;
  std::vector<PartialQuotient> period_part() const;
};

/// Expands α under `alg` for at most max_steps quotients.
///
/// Finite when α_n = b_n exactly. Periodic when (P_n, Q_n, n mod m) repeats
/// for the algorithm's phase modulus m (new keeps a v_p(α_0) < 0 start
/// apart from later states), reporting the first recurrence;
/// this needs pre + period <= max_steps. Before a Periodic result is
/// returned, the loop is run one more period from the repeat and must
/// reproduce the period's quotients (std::logic_error otherwise).
/// Truncated otherwise.
ExpansionResult expand(const PrimeCtx& ctx, const Surd& alpha, const AlgorithmId& alg, long max_steps);

/// Convergence conditions for the r-block scheme, checked block by block
/// (block n needs b_0..b_{rn+r}):
///   u2: v_p(U_{rn+2}^{(i)}) = 0 for i = 2..r-1;
///   u3: v_p(U_{rn+3}^{(i)}) = 0 for i = 2..r-2 (r >= 4),
/// with U_m^{(0)} = 1, U_m^{(1)} = b_m, U_m^{(k+1)} = b_{m+k} U_m^{(k)} + U_m^{(k-1)}.
/// The valuation pattern v_p(b_{rn+1}) < 0, v_p(b_{rn+i}) = 0 (i = 2..r)
/// that the conditions presuppose is recorded separately in pattern_breaks.
struct ConvergenceCertificate {
  struct Violation {
    enum class Kind { kPattern, kU2, kU3 };
    Kind kind;
    long block;
    long index;      // offending quotient index (pattern) or m (u2/u3)
    long order;      // i in the condition; 1 for pattern breaks
    long valuation;  // observed valuation
  };

  int r = 0;
  long blocks_checked = 0;
  std::vector<Violation> violations;      // u2/u3
  std::vector<Violation> pattern_breaks;  // premise

  bool holds() const { return violations.empty(); }
};

/// U_m^{(0..order)} for the quotient sequence b.
std::vector<ScaledInt> u_sequence(const std::vector<PartialQuotient>& b, long m, long order);

ConvergenceCertificate certify_rblock(const std::vector<PartialQuotient>& quotients, int r);

struct RBlockExpansion {
  ExpansionResult result;
  ConvergenceCertificate certificate;
};

/// expand() under rblock(r) plus its certificate. Periodic quotient lists
/// are unrolled by one extra period before certification.
RBlockExpansion rblock_expand(const PrimeCtx& ctx, const Surd& alpha, int r, long max_steps);

struct ZeroEliminated {
  std::vector<PartialQuotient> quotients;
  bool trailing_zero = false;
};

/// [.., x, 0, y, ..] -> [.., x + y, ..], left to right until no interior zero
/// remains. A leading zero is kept; a trailing zero is kept and flagged.
ZeroEliminated zero_eliminate(const std::vector<PartialQuotient>& quotients);

/// (A_n, B_n) for n = 0..N.
std::vector<std::pair<ScaledInt, ScaledInt>> convergents(const std::vector<PartialQuotient>& quotients);

}  // namespace padicfrac
