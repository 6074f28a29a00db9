#include "padicfrac/expansion.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace padicfrac {
namespace {

struct StateKey {
  Int P;
  Int Q;
  long phase;

  bool operator==(const StateKey& o) const { return phase == o.phase && P == o.P && Q == o.Q; }
};

std::size_t hash_int(const Int& x) {
  const mpz_srcptr z = x.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = hash_int(k.P);
    h ^= hash_int(k.Q) * 31 + static_cast<std::size_t>(k.phase);
    return h;
  }
};

StateKey make_key(const Int& D, const Int& P, const Int& Q, long phase) {
  if (D != 0) return {P, Q, phase};
  // Rational states are kept unreduced by the update rule; compare values.
  Int g;
  mpz_gcd(g.get_mpz_t(), P.get_mpz_t(), Q.get_mpz_t());
  Int P_ = P / g, Q_ = Q / g;
  if (Q_ < 0) {
    P_ = -P_;
    Q_ = -Q_;
  }
  return {P_, Q_, phase};
}

// Whether α_n = (P + √D)/Q equals b exactly; only possible when D = 0.
bool equals_quotient(Prime p, const Int& D, const Int& P, const Int& Q, const PartialQuotient& b) {
  if (D != 0) return false;
  return P * pow_p(p, static_cast<unsigned long>(b.exp())) == b.unit() * Q;
}

// b·Q as an integer; the denominator of b must divide Q.
Int times_q(Prime p, const PartialQuotient& b, const Int& Q) {
  const Int pe = pow_p(p, static_cast<unsigned long>(b.exp()));
  Int prod = b.unit() * Q;
  if (!mpz_divisible_p(prod.get_mpz_t(), pe.get_mpz_t())) {
    throw std::logic_error("step_update: b_n Q_n is not an integer");
  }
  mpz_divexact(prod.get_mpz_t(), prod.get_mpz_t(), pe.get_mpz_t());
  return prod;
}

Int exact_div(const Int& a, const Int& b, const char* what) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::logic_error(what);
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool phase_zero(long n, long m) { return n % m == 0; }

}  // namespace

const char* to_string(ResultKind kind) {
  switch (kind) {
    case ResultKind::kFinite: return "finite";
    case ResultKind::kPeriodic: return "periodic";
    case ResultKind::kTruncated: return "truncated";
  }
  return "?";
}

ExpansionState initial_state(Prime p, const Surd& alpha) {
  if (alpha.P.get_den() != 1 || alpha.Q.get_den() != 1) {
    throw std::invalid_argument("initial_state: surd is not normalized");
  }
  ExpansionState st;
  st.n = 0;
  st.P = alpha.P.get_num();
  st.Q = alpha.Q.get_num();
  st.A_prev = ScaledInt(p, 0);
  st.A_cur = ScaledInt(p, 1);
  st.B_prev = ScaledInt(p, 1);
  st.B_cur = ScaledInt(p, 0);
  return st;
}

ExpansionState step_update(Prime p, const Int& D, const ExpansionState& state, const PartialQuotient& b) {
  ExpansionState next;
  next.n = state.n + 1;
  next.A_prev = state.A_cur;
  next.A_cur = b * state.A_cur + state.A_prev;
  next.B_prev = state.B_cur;
  next.B_cur = b * state.B_cur + state.B_prev;

  const Int bq = times_q(p, b, state.Q);
  if (D != 0) {
    next.P = bq - state.P;
    next.Q = exact_div(D - next.P * next.P, state.Q, "step_update: Q_n does not divide D - P_{n+1}^2");
    return next;
  }

  const Int d = state.P - bq;
  if (d == 0) throw std::domain_error("step_update: alpha_n equals b_n");
  const long e = vp(state.Q, p) - vp(state.P, p);
  const Int g = pow_p(p, static_cast<unsigned long>(std::max(e, 0L)));
  const Int q = exact_div(state.Q, g, "step_update: p^e does not divide Q_n");
  next.P = sign(d) * q;
  next.Q = exact_div(abs(d), g, "step_update: p^e does not divide P_n - b_n Q_n");
  return next;
}

PartialQuotient choose_quotient(const AlgorithmId& alg, Prime p, const Int& P, const Int& Q, long n,
                                const Truncations& tr) {
  using K = AlgorithmId::Kind;
  const bool even = n % 2 == 0;
  switch (alg.kind) {
    case K::kBrowkin1: {
      if (even) return tr.s(p);
      ScaledInt t = tr.t(p);
      // v_p(α - t) != 0 exactly when the digit a_0 vanishes.
      if (tr.s_num == tr.t_num) t = t - ScaledInt(p, Int(sign(tr.t_num)));
      return t;
    }
    case K::kBrowkin4:
      return even ? s1(p, P, Q, tr) : t1(p, P, Q, tr);
    case K::kMurru:
      return even ? tr.s(p) : tr.t(p);
    case K::kNew:
      if (n > 0 && tr.valuation > 0) throw std::logic_error("new: v_p(alpha_n) > 0 after the first step");
      if (n == 0 || tr.valuation >= 0) return sbar(p, P, Q, tr);
      return tbar(p, P, Q, tr);
    case K::kNeww:
      return even ? sbar(p, P, Q, tr) : tbar(p, P, Q, tr);
    case K::kModified:
    case K::kRBlock:
      return phase_zero(n, alg.phase_modulus()) ? sbar(p, P, Q, tr) : tbar(p, P, Q, tr);
  }
  throw std::logic_error("choose_quotient: unknown algorithm");
}

PartialQuotient choose_quotient(const PrimeCtx& ctx, const AlgorithmId& alg, const Surd& alpha, long n) {
  validate(ctx, alpha);
  if (alg.quadratic_only() && alpha.is_rational()) {
    throw std::invalid_argument(alg.name() + ": requires D != 0");
  }
  const Surd norm = normalize(ctx, alpha);
  const Int P = norm.P.get_num(), Q = norm.Q.get_num();
  if (norm.is_rational() && P == 0) return ScaledInt(ctx.p(), 0);
  Embedding emb(ctx, norm.D, norm.branch);
  return choose_quotient(alg, ctx.p(), P, Q, n, emb.truncations(P, Q));
}

std::vector<PartialQuotient> ExpansionResult::preperiod_part() const {
  if (kind != ResultKind::kPeriodic) return quotients;
  return {quotients.begin(), quotients.begin() + preperiod};
}

std::vector<PartialQuotient> ExpansionResult::period_part() const {
  if (kind != ResultKind::kPeriodic) return {};
  return {quotients.begin() + preperiod, quotients.begin() + preperiod + period};
}

ExpansionResult expand(const PrimeCtx& ctx, const Surd& alpha, const AlgorithmId& alg, long max_steps) {
  if (max_steps < 1) throw std::invalid_argument("expand: max_steps must be >= 1");
  validate(ctx, alpha);
  if (alg.quadratic_only() && alpha.is_rational()) {
    throw std::invalid_argument(alg.name() + ": requires D != 0");
  }

  const Prime p = ctx.p();
  ExpansionResult res;
  res.p = p;
  res.algorithm = alg;
  res.start = normalize(ctx, alpha);
  const Int& D = res.start.D;

  ExpansionState st = initial_state(p, res.start);
  if (D == 0 && st.P == 0) {
    res.kind = ResultKind::kFinite;
    res.quotients.push_back(ScaledInt(p, 0));
    res.diagnostics.push_back({0, kInfiniteValuation, kInfiniteValuation, st.P, st.Q, 0});
    return res;
  }

  Embedding emb(ctx, D, res.start.branch);
  const long m = alg.phase_modulus();
  // new takes s̄ at n = 0 whatever v_p(α_0) is; when v_p(α_0) < 0 that step
  // follows a rule no later state does, so it gets a phase of its own.
  const bool own_start = alg.kind == AlgorithmId::Kind::kNew && emb.valuation(st.P, st.Q) < 0;
  const auto phase = [&](long n) { return own_start && n == 0 ? m : n % m; };
  std::unordered_map<StateKey, long, StateKeyHash> seen;

  for (long n = 0;; ++n) {
    auto [it, inserted] = seen.emplace(make_key(D, st.P, st.Q, phase(n)), n);
    if (!inserted) {
      const long j = it->second;
      res.kind = ResultKind::kPeriodic;
      res.preperiod = j;
      res.period = n - j;
      // One more period from the repeat must reproduce the same quotients.
      ExpansionState probe = st;
      for (long i = 0; i < res.period; ++i) {
        const Truncations tr = emb.truncations(probe.P, probe.Q);
        const PartialQuotient b = choose_quotient(alg, p, probe.P, probe.Q, probe.n, tr);
        if (!(b == res.quotients[static_cast<std::size_t>(j + i)])) {
          throw std::logic_error("expand: detected cycle does not repeat its quotients");
        }
        probe = step_update(p, D, probe, b);
      }
      if (!(make_key(D, probe.P, probe.Q, phase(probe.n)) == it->first)) {
        throw std::logic_error("expand: detected cycle does not return to its state");
      }
      return res;
    }
    if (n == max_steps) {
      res.kind = ResultKind::kTruncated;
      return res;
    }

    const Truncations tr = emb.truncations(st.P, st.Q);
    const PartialQuotient b = choose_quotient(alg, p, st.P, st.Q, n, tr);
    res.quotients.push_back(b);
    const bool done = equals_quotient(p, D, st.P, st.Q, b);
    StepDiagnostics diag{n, tr.valuation, b.valuation(), st.P, st.Q, 0};
    if (done) {
      diag.vp_B = (b * st.B_cur + st.B_prev).valuation();
      res.diagnostics.push_back(std::move(diag));
      res.kind = ResultKind::kFinite;
      return res;
    }
    st = step_update(p, D, st, b);
    diag.vp_B = st.B_cur.valuation();
    res.diagnostics.push_back(std::move(diag));
  }
}

std::vector<ScaledInt> u_sequence(const std::vector<PartialQuotient>& b, long m, long order) {
  if (m < 0 || order < 0) throw std::invalid_argument("u_sequence: negative index");
  if (order >= 1 && static_cast<std::size_t>(m + order - 1) >= b.size()) {
    throw std::out_of_range("u_sequence: not enough quotients");
  }
  const Prime p = b.empty() ? 2 : b.front().prime();
  std::vector<ScaledInt> u;
  u.reserve(static_cast<std::size_t>(order + 1));
  u.push_back(ScaledInt(p, 1));
  if (order >= 1) u.push_back(b[static_cast<std::size_t>(m)]);
  for (long k = 1; k < order; ++k) {
    u.push_back(b[static_cast<std::size_t>(m + k)] * u[static_cast<std::size_t>(k)] +
                u[static_cast<std::size_t>(k - 1)]);
  }
  return u;
}

ConvergenceCertificate certify_rblock(const std::vector<PartialQuotient>& quotients, int r) {
  if (r < 3) throw std::invalid_argument("certify_rblock: r must be >= 3");
  using V = ConvergenceCertificate::Violation;
  ConvergenceCertificate cert;
  cert.r = r;
  const long size = static_cast<long>(quotients.size());
  for (long blk = 0; blk * r + r < size; ++blk) {
    const long base = blk * r;
    ++cert.blocks_checked;

    const long v1 = quotients[static_cast<std::size_t>(base + 1)].valuation();
    if (!(v1 < 0)) cert.pattern_breaks.push_back({V::Kind::kPattern, blk, base + 1, 1, v1});
    for (long i = 2; i <= r; ++i) {
      const long vi = quotients[static_cast<std::size_t>(base + i)].valuation();
      if (vi != 0) cert.pattern_breaks.push_back({V::Kind::kPattern, blk, base + i, i, vi});
    }

    const auto u2 = u_sequence(quotients, base + 2, r - 1);
    for (long i = 2; i <= r - 1; ++i) {
      const long v = u2[static_cast<std::size_t>(i)].valuation();
      if (v != 0) cert.violations.push_back({V::Kind::kU2, blk, base + 2, i, v});
    }
    if (r >= 4) {
      const auto u3 = u_sequence(quotients, base + 3, r - 2);
      for (long i = 2; i <= r - 2; ++i) {
        const long v = u3[static_cast<std::size_t>(i)].valuation();
        if (v != 0) cert.violations.push_back({V::Kind::kU3, blk, base + 3, i, v});
      }
    }
  }
  return cert;
}

RBlockExpansion rblock_expand(const PrimeCtx& ctx, const Surd& alpha, int r, long max_steps) {
  const AlgorithmId alg = AlgorithmId::rblock(r);
  RBlockExpansion out{expand(ctx, alpha, alg, max_steps), {}};
  std::vector<PartialQuotient> seq = out.result.quotients;
  if (out.result.kind == ResultKind::kPeriodic) {
    const auto per = out.result.period_part();
    seq.insert(seq.end(), per.begin(), per.end());
  }
  out.certificate = certify_rblock(seq, r);
  return out;
}

ZeroEliminated zero_eliminate(const std::vector<PartialQuotient>& quotients) {
  ZeroEliminated out{quotients, false};
  auto& q = out.quotients;
  std::size_t i = 1;
  while (i + 1 < q.size()) {
    if (q[i].is_zero()) {
      q[i - 1] = q[i - 1] + q[i + 1];
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(i), q.begin() + static_cast<std::ptrdiff_t>(i + 2));
      if (i > 1) --i;
    } else {
      ++i;
    }
  }
  out.trailing_zero = q.size() > 1 && q.back().is_zero();
  return out;
}

std::vector<std::pair<ScaledInt, ScaledInt>> convergents(const std::vector<PartialQuotient>& quotients) {
  std::vector<std::pair<ScaledInt, ScaledInt>> out;
  if (quotients.empty()) return out;
  const Prime p = quotients.front().prime();
  ScaledInt A2(p, 0), A1(p, 1), B2(p, 1), B1(p, 0);
  out.reserve(quotients.size());
  for (const auto& b : quotients) {
    ScaledInt A = b * A1 + A2;
    ScaledInt B = b * B1 + B2;
    A2 = std::move(A1);
    A1 = A;
    B2 = std::move(B1);
    B1 = B;
    out.emplace_back(std::move(A), std::move(B));
  }
  return out;
}

}  // namespace padicfrac
