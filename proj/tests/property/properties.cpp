#include "properties.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "generators.hpp"
#include "padicfrac/expansion.hpp"
#include "padicfrac/floor_functions.hpp"
#include "padicfrac/oracle.hpp"

namespace proptest {

using namespace padicfrac;

void Outcome::fail(const std::string& what) {
  if (failures == 0) first_failure = what;
  ++failures;
}

std::string Outcome::summary() const {
  std::ostringstream os;
  os << name << ": " << cases << " cases, " << failures << " failures";
  if (failures > 0) os << " (first: " << first_failure << ")";
  return os.str();
}

namespace {

constexpr long kInf = kInfiniteValuation;

Outcome& tally() {
  static Outcome t{"finite_inversion"};
  return t;
}

std::string describe(Prime p, const Surd& a) {
  std::ostringstream os;
  os << "p=" << p << " " << a.str();
  return os.str();
}

std::string describe(Prime p, const Surd& a, const AlgorithmId& alg) { return alg.name() + " " + describe(p, a); }

// Every Finite expansion of a rational goes through here.
void note_expansion(const Surd& input, const ExpansionResult& r) {
  if (r.kind != ResultKind::kFinite || !input.is_rational()) return;
  Outcome& t = tally();
  ++t.cases;
  try {
    const Rat back = oracle::reconstruct_rational(r.quotients);
    if (back != input.center()) t.fail(describe(r.p, input, r.algorithm) + " reconstructs to " + to_string(back));
  } catch (const std::exception& e) {
    t.fail(describe(r.p, input, r.algorithm) + ": " + e.what());
  }
}

ExpansionResult run(const PrimeCtx& ctx, const Surd& a, const AlgorithmId& alg, long steps) {
  ExpansionResult r;
  try {
    r = expand(ctx, a, alg, steps);
  } catch (const std::exception& e) {
    throw std::runtime_error(describe(ctx.p(), a, alg) + ": " + e.what());
  }
  note_expansion(a, r);
  return r;
}

// Quotients of r, with a periodic tail repeated out to at least n terms.
std::vector<PartialQuotient> unrolled(const ExpansionResult& r, std::size_t n) {
  std::vector<PartialQuotient> q = r.quotients;
  if (r.kind == ResultKind::kPeriodic) {
    const auto period = r.period_part();
    while (q.size() < n) q.insert(q.end(), period.begin(), period.end());
  }
  return q;
}

Surd random_alpha(testgen::Rng& rng, const PrimeCtx& ctx) {
  if (rng.coin()) return Surd::rational(rng.rational_mixed(ctx.p(), 1000000, 1000000));
  return rng.surd(ctx);
}

// v_p(α - x) with α = (P + √D)/Q.
long vp_minus(const PrimeCtx& ctx, const Surd& a, const Rat& x) {
  if (a.is_rational()) return vp(Rat(a.center() - x), ctx.p());
  return vp(ctx, Surd{Rat(a.P - x * a.Q), a.Q, a.D, a.branch});
}

bool p_power_denominator(const Rat& x, Prime p) {
  Int d = x.get_den();
  strip(d, p);
  return d == 1;
}

long vsum(long a, long b) { return (a == kInf || b == kInf) ? kInf : a + b; }

struct RatConvergents {
  std::vector<Rat> A, B;  // index n
};

RatConvergents rat_convergents(const std::vector<PartialQuotient>& q) {
  RatConvergents c;
  Rat A2 = 0, A1 = 1, B2 = 1, B1 = 0;
  for (const auto& b : q) {
    const Rat x = b.to_rat();
    const Rat A = x * A1 + A2, B = x * B1 + B2;
    c.A.push_back(A);
    c.B.push_back(B);
    A2 = A1;
    A1 = A;
    B2 = B1;
    B1 = B;
  }
  return c;
}

const std::vector<AlgorithmId>& all_algorithms() {
  static const std::vector<AlgorithmId> algs{AlgorithmId::browkin1(), AlgorithmId::browkin4(), AlgorithmId::murru(),
                                             AlgorithmId::new_alg(),  AlgorithmId::neww(),     AlgorithmId::modified(),
                                             AlgorithmId::rblock(4)};
  return algs;
}

std::vector<long> admissible(const PrimeCtx& ctx, long d_max) {
  std::vector<long> out;
  for (long d = 1; d <= d_max; ++d) {
    if (!is_perfect_square(Int(d)) && ctx.sqrt_in_qp(Int(d))) out.push_back(d);
  }
  return out;
}

}  // namespace

Outcome floor_value_sets(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"floor_value_sets"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ p);
  const Rat half_p(Int(p), Int(2)), half(1, 2);
  std::set<Rat> s_values, t_values;
  for (long i = 0; i < cases; ++i) {
    const Surd a = random_alpha(rng, ctx);
    ++out.cases;
    const Rat sv = s(ctx, a), tv = t(ctx, a);
    if (!p_power_denominator(sv, p) || !p_power_denominator(tv, p)) out.fail(describe(p, a) + " denominator");
    if (!(abs(sv) < half_p)) out.fail(describe(p, a) + " |s| = " + to_string(Rat(abs(sv))));
    if (!(abs(tv) < half)) out.fail(describe(p, a) + " |t| = " + to_string(Rat(abs(tv))));
    const long vs = vp_minus(ctx, a, sv), vt = vp_minus(ctx, a, tv);
    if (!(vs >= 1)) out.fail(describe(p, a) + " v(a - s) = " + std::to_string(vs));
    if (!(vt >= 0)) out.fail(describe(p, a) + " v(a - t) = " + std::to_string(vt));
    s_values.insert(sv);
    t_values.insert(tv);
  }
  const std::vector<Rat> sv(s_values.begin(), s_values.end()), tv(t_values.begin(), t_values.end());
  for (std::size_t i = 0; i < sv.size(); ++i) {
    for (std::size_t j = i + 1; j < sv.size(); ++j) {
      if (vp(Rat(sv[i] - sv[j]), p) > 0) out.fail("s values " + to_string(sv[i]) + ", " + to_string(sv[j]));
    }
  }
  for (std::size_t i = 0; i < tv.size(); ++i) {
    for (std::size_t j = i + 1; j < tv.size(); ++j) {
      if (vp(Rat(tv[i] - tv[j]), p) >= 0) out.fail("t values " + to_string(tv[i]) + ", " + to_string(tv[j]));
    }
  }
  return out;
}

Outcome barred_floor_bounds(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"barred_floor_bounds"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 8));
  auto check = [&](const Surd& a, const Rat& base, const Rat& barred, const Rat& step, const char* which) {
    const Rat c = a.center();
    const Rat dist = abs(Rat(barred - c));
    const Rat limit = step / 2;
    if (dist < limit) return;
    if (dist == limit) {
      // a tie: the rounding must have moved away from zero
      const Rat m = (barred - base) / step, u = (c - base) / step;
      if (abs(m) > abs(u)) return;
    }
    out.fail(describe(p, a) + " " + which + " = " + to_string(barred) + " at distance " + to_string(dist));
  };
  for (long i = 0; i < cases; ++i) {
    Surd a = random_alpha(rng, ctx);
    if (i % 10 == 0) {
      // j + p(2k+1)/2 sits exactly halfway between two candidates
      const long j = rng.range(-50, 50), k = rng.range(-20, 20);
      a = Surd::rational(Rat(j) + Rat(Int(static_cast<long>(p) * (2 * k + 1)), Int(2)));
    }
    ++out.cases;
    const Rat sb = sbar(ctx, a).to_rat(), tb = tbar(ctx, a).to_rat();
    const long vs = vp_minus(ctx, a, sb), vt = vp_minus(ctx, a, tb);
    if (!(vs > 0)) out.fail(describe(p, a) + " v(a - sbar) = " + std::to_string(vs));
    if (!(vt >= 0)) out.fail(describe(p, a) + " v(a - tbar) = " + std::to_string(vt));
    check(a, s(ctx, a), sb, Rat(Int(p)), "sbar");
    check(a, t(ctx, a), tb, Rat(1), "tbar");
  }
  return out;
}

Outcome adjacent_valuation_sum(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"adjacent_valuation_sum"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 16));
  for (long i = 0; i < cases; ++i) {
    const Surd a = random_alpha(rng, ctx);
    for (const auto& alg : {AlgorithmId::new_alg(), AlgorithmId::neww()}) {
      ++out.cases;
      try {
        const auto r = run(ctx, a, alg, 40);
        const auto q = unrolled(r, 40);
        // b_0 = sbar is a multiple of p when v(α) > 0, so the pair (b_0, b_1) is exempt
        const std::size_t first = q[0].is_zero() || q[0].valuation() > 0 ? 1 : 0;
        for (std::size_t n = first; n + 1 < q.size(); ++n) {
          const long sum = vsum(q[n].valuation(), q[n + 1].valuation());
          if (!(sum < 0)) {
            out.fail(describe(p, a, alg) + " n=" + std::to_string(n) + " sum=" + std::to_string(sum));
            break;
          }
        }
      } catch (const std::exception& e) {
        out.fail(describe(p, a, alg) + ": " + e.what());
      }
    }
  }
  return out;
}

Outcome block_unit_condition(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"block_unit_condition"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 20));
  for (long i = 0; i < cases; ++i) {
    const Surd a = random_alpha(rng, ctx);
    ++out.cases;
    const auto r = run(ctx, a, AlgorithmId::modified(), 60);
    const auto z = zero_eliminate(unrolled(r, 60)).quotients;
    // the last term of a cut-off prefix may still absorb a later zero
    const std::size_t end = r.kind == ResultKind::kFinite ? z.size() : z.size() - 1;
    for (std::size_t n = 1; n + 2 < end; ++n) {
      if (z[n].valuation() < 0 && z[n + 1].valuation() == 0 && z[n + 2].valuation() == 0) {
        const long v = (z[n + 1] * z[n + 2] + ScaledInt(p, 1)).valuation();
        if (v != 0) out.fail(describe(p, a) + " n=" + std::to_string(n) + " v=" + std::to_string(v));
      }
    }
  }
  return out;
}

Outcome determinant_identity(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"determinant_identity"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 24));
  for (long i = 0; i < cases; ++i) {
    const Surd a = random_alpha(rng, ctx);
    for (const auto& alg : all_algorithms()) {
      if (alg.quadratic_only() && a.is_rational()) continue;
      ++out.cases;
      const auto r = run(ctx, a, alg, 30);
      const auto c = rat_convergents(r.quotients);
      const auto engine = convergents(r.quotients);
      Rat A_prev = 1, B_prev = 0;
      for (std::size_t n = 0; n < c.A.size(); ++n) {
        const Rat det = c.A[n] * B_prev - c.B[n] * A_prev;
        const Rat want = n % 2 == 0 ? Rat(-1) : Rat(1);
        if (det != want) {
          out.fail(describe(p, a, alg) + " n=" + std::to_string(n) + " det=" + to_string(det));
          break;
        }
        if (engine[n].first.to_rat() != c.A[n] || engine[n].second.to_rat() != c.B[n]) {
          out.fail(describe(p, a, alg) + " engine convergent differs at n=" + std::to_string(n));
          break;
        }
        A_prev = c.A[n];
        B_prev = c.B[n];
      }
    }
  }
  return out;
}

Outcome convergent_valuations(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"convergent_valuations"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 28));
  const std::vector<AlgorithmId> algs{AlgorithmId::new_alg(), AlgorithmId::neww(), AlgorithmId::modified(),
                                      AlgorithmId::murru(), AlgorithmId::browkin1()};
  for (long i = 0; i < cases; ++i) {
    const Surd a = random_alpha(rng, ctx);
    for (const auto& alg : algs) {
      const auto r = run(ctx, a, alg, 40);
      const auto& q = r.quotients;
      // longest prefix b_0..b_N meeting the hypotheses
      std::size_t N = 0;
      for (std::size_t k = 1; k < q.size(); ++k) {
        const long v = q[k].valuation();
        if (q[k].is_zero() || v > 0) break;
        if (k >= 2 && !(q[k - 1].valuation() + v < 0)) break;
        N = k;
      }
      if (N == 0) continue;
      ++out.cases;
      const auto c = rat_convergents(q);
      const bool b0_zero = q[0].is_zero();
      // with b_0 != 0 the A formula needs the hypotheses from b_0 on
      const bool a_clause = b0_zero || (q[0].valuation() <= 0 && q[0].valuation() + q[1].valuation() < 0);
      long sum_b = 0, sum_a = b0_zero ? 0 : q[0].valuation();
      for (std::size_t n = 1; n <= N; ++n) {
        sum_b += q[n].valuation();
        if (!b0_zero || n >= 2) sum_a += q[n].valuation();
        if (vp(c.B[n], p) != sum_b) {
          out.fail(describe(p, a, alg) + " v(B_" + std::to_string(n) + ")=" + std::to_string(vp(c.B[n], p)) +
                   " sum=" + std::to_string(sum_b));
          break;
        }
        if (a_clause && (!b0_zero || n >= 2) && vp(c.A[n], p) != sum_a) {
          out.fail(describe(p, a, alg) + " v(A_" + std::to_string(n) + ")=" + std::to_string(vp(c.A[n], p)) +
                   " sum=" + std::to_string(sum_a));
          break;
        }
      }
    }
  }
  return out;
}

Outcome convergence_monotone(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"convergence_monotone"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 32));
  constexpr long kUndefined = std::numeric_limits<long>::min();
  for (long i = 0; i < cases; ++i) {
    const Surd a = random_alpha(rng, ctx);
    for (const auto& alg : {AlgorithmId::new_alg(), AlgorithmId::neww(), AlgorithmId::modified()}) {
      ++out.cases;
      const auto r = run(ctx, a, alg, 30);
      const auto q = unrolled(r, 30);
      const auto c = rat_convergents(q);
      // w[n] = v(α - A_n/B_n); kUndefined where B_n = 0
      std::vector<long> w, vB;
      for (std::size_t n = 0; n < q.size(); ++n) {
        w.push_back(c.B[n] == 0 ? kUndefined : vp_minus(ctx, a, Rat(c.A[n] / c.B[n])));
        vB.push_back(vp(c.B[n], p));
      }
      const std::string who = describe(p, a, alg);
      if (alg.kind != AlgorithmId::Kind::kModified) {
        for (std::size_t n = 1; n < w.size(); ++n) {
          if (w[n] == kUndefined || !(w[n] > w[n - 1])) {
            out.fail(who + " n=" + std::to_string(n) + " v=" + std::to_string(w[n]) + " prev=" + std::to_string(w[n - 1]));
            break;
          }
        }
        continue;
      }
      // modified: valuations stay level inside a block, so the best
      // approximation only has to improve within every three steps
      for (std::size_t n = 3; n < w.size(); ++n) {
        const long best = std::max({w[n - 2], w[n - 1], w[n]});
        if (w[n - 3] != kUndefined && best != kInf && !(best > w[n - 3])) {
          out.fail(who + " no gain over n=" + std::to_string(n - 2) + ".." + std::to_string(n));
          break;
        }
      }
      for (std::size_t n = 0; n + 1 < w.size(); ++n) {
        if (w[n] == kUndefined || w[n] == kInf || vB[n] == kInf || vB[n + 1] == kInf) continue;
        if (w[n] < -(vB[n] + vB[n + 1])) {
          out.fail(who + " n=" + std::to_string(n) + " v=" + std::to_string(w[n]) + " below -v(B_n B_n+1)");
          break;
        }
      }
    }
  }
  return out;
}

Outcome rational_contraction(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"rational_contraction"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 36));
  const std::uint64_t kMax = 1000000000000000000ULL;
  for (long i = 0; i < cases; ++i) {
    Int num = rng.positive(kMax);
    if (rng.coin()) num = -num;
    const Surd a = Surd::rational(make_rat(num, rng.positive(kMax)));
    for (const auto& alg : {AlgorithmId::new_alg(), AlgorithmId::neww()}) {
      ++out.cases;
      const auto r = run(ctx, a, alg, 1000);
      if (r.kind != ResultKind::kFinite) {
        out.fail(describe(p, a, alg) + " did not terminate");
        continue;
      }
      const auto& d = r.diagnostics;
      for (std::size_t n = 0; n + 2 < d.size(); ++n) {
        if (!(2 * abs(d[n + 2].P) < abs(d[n + 1].P))) {
          out.fail(describe(p, a, alg) + " |P| contraction at n=" + std::to_string(n));
          break;
        }
        if (!(4 * abs(d[n + 2].Q) < abs(d[n].Q))) {
          out.fail(describe(p, a, alg) + " |Q| contraction at n=" + std::to_string(n));
          break;
        }
      }
      const Int Q0 = abs(d[0].Q);
      long k = 0;
      for (Int f = 1; f < Q0; f *= 4) ++k;
      const long steps = static_cast<long>(r.quotients.size());
      if (steps > 2 * k + 2) {
        out.fail(describe(p, a, alg) + " " + std::to_string(steps) + " steps, bound " + std::to_string(2 * k + 2));
      }
    }
  }
  return out;
}

Outcome small_prime_q_bound(Prime p, long d_max) {
  Outcome out{"small_prime_q_bound"};
  const PrimeCtx ctx(p);
  const Rat p2(Int(p) * p);
  for (long D : admissible(ctx, d_max)) {
    const Surd a = Surd::sqrt(Int(D));
    for (const auto& alg : {AlgorithmId::new_alg(), AlgorithmId::neww()}) {
      ++out.cases;
      const auto r = run(ctx, a, alg, 5000);
      if (r.kind != ResultKind::kPeriodic) {
        out.fail(describe(p, a, alg) + " not periodic");
        continue;
      }
      const auto& d = r.diagnostics;
      Rat M = std::max(Rat(abs(d[0].Q)), Rat(p2 * D / 4 + 1));
      if (d.size() > 1) M = std::max(M, Rat(abs(d[1].Q)));
      for (const auto& s : d) {
        if (Rat(abs(s.Q)) > M) {
          out.fail(describe(p, a, alg) + " |Q_" + std::to_string(s.n) + "|=" + to_string(Int(abs(s.Q))));
          break;
        }
      }
    }
  }
  return out;
}

Outcome block_q_bound(Prime p, long d_max) {
  Outcome out{"block_q_bound"};
  const PrimeCtx ctx(p);
  const Rat p2(Int(p) * p);
  for (long D : admissible(ctx, d_max)) {
    const Surd a = Surd::sqrt(Int(D));
    ++out.cases;
    const auto r = run(ctx, a, AlgorithmId::modified(), 1000);
    if (r.kind != ResultKind::kPeriodic) {
      out.fail(describe(p, a) + " not periodic");
      continue;
    }
    const auto& d = r.diagnostics;
    Rat M = std::max(Rat(abs(d[0].Q)), Rat(p2 * D / 4 + 1));
    M = std::max(M, Rat(4 * (p2 + 1) / 3));
    const Rat bound = p2 * M / 4 + 1;
    for (const auto& s : d) {
      if (Rat(abs(s.Q)) > bound) {
        out.fail(describe(p, a) + " |Q_" + std::to_string(s.n) + "|=" + to_string(Int(abs(s.Q))));
        break;
      }
    }
  }
  return out;
}

Outcome digit_oracle(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"digit_oracle"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 40));
  for (long i = 0; i < cases; ++i) {
    const Rat x = rng.rational_mixed(p, 1000000000000ULL, 1000000000000ULL);
    ++out.cases;
    const long v = vp(x, p);
    const long K = v + 24;
    const auto engine = digits(ctx, Surd::rational(x), v, K);
    const auto oracle = oracle::rational_digits(x, p, K);
    if (engine != oracle) out.fail("p=" + std::to_string(p) + " x=" + to_string(x));
  }
  return out;
}

Outcome rational_inversion(Prime p, long cases, std::uint64_t seed) {
  Outcome out{"rational_inversion"};
  const PrimeCtx ctx(p);
  testgen::Rng rng(seed ^ (p << 44));
  for (long i = 0; i < cases; ++i) {
    const Surd a = Surd::rational(rng.rational_mixed(p, 1000000000, 1000000000));
    for (const auto& alg : all_algorithms()) {
      if (alg.quadratic_only()) continue;
      const auto r = expand(ctx, a, alg, 300);
      const bool must_finish = alg.kind == AlgorithmId::Kind::kNew || alg.kind == AlgorithmId::Kind::kNeww ||
                               alg.kind == AlgorithmId::Kind::kModified;
      if (must_finish && r.kind != ResultKind::kFinite) out.fail(describe(p, a, alg) + " did not terminate");
      if (r.kind != ResultKind::kFinite) continue;
      ++out.cases;
      const Rat back = oracle::reconstruct_rational(r.quotients);
      if (back != a.center()) out.fail(describe(p, a, alg) + " reconstructs to " + to_string(back));
      note_expansion(a, r);
    }
  }
  return out;
}

Outcome cycle_soundness(Prime p, long d_max, long random_cases, std::uint64_t seed) {
  Outcome out{"cycle_soundness"};
  const PrimeCtx ctx(p);
  auto verify = [&](const Surd& a, const AlgorithmId& alg, long steps) {
    const auto r = run(ctx, a, alg, steps);
    if (r.kind != ResultKind::kPeriodic) return;
    ++out.cases;
    const auto rep = oracle::verify_period(p, a, alg, r);
    if (!rep.ok()) {
      std::string bad;
      for (const auto& c : rep.checks) {
        if (!c.passed) bad += " " + c.name;
      }
      out.fail(describe(p, a, alg) + ":" + bad);
    }
  };
  for (long D : admissible(ctx, d_max)) {
    for (const auto& alg : all_algorithms()) verify(Surd::sqrt(Int(D)), alg, 2000);
  }
  testgen::Rng rng(seed ^ (p << 48));
  for (long i = 0; i < random_cases; ++i) {
    const Surd a = rng.surd(ctx, 300);
    for (const auto& alg : {AlgorithmId::neww(), AlgorithmId::modified(), AlgorithmId::murru()}) verify(a, alg, 500);
  }
  return out;
}

Outcome finite_inversion_tally() { return tally(); }

}  // namespace proptest
