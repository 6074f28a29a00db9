#include "padicfrac/oracle.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace padicfrac::oracle {
namespace {

constexpr std::size_t kMaxWitnesses = 8;

Int ipow(Prime p, long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}

long val(Int x, Prime p) {
  if (x == 0) return kInfiniteValuation;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long val(const Rat& x, Prime p) {
  if (x == 0) return kInfiniteValuation;
  return val(Int(x.get_num()), p) - val(Int(x.get_den()), p);
}

// Balanced digit of the p-adic integer num/den (p ∤ den) at index 0.
long digit0(const Int& num, const Int& den, Prime p) {
  Int inv;
  const Int P(p);
  Int d = den % P;
  if (d < 0) d += P;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
  Int r = (num % P) * inv % P;
  if (r < 0) r += P;
  long a = r.get_si();
  if (p != 2 && a > static_cast<long>(p / 2)) a -= static_cast<long>(p);
  return a;
}

// (x_n, y_n) with α_n = x_n + y_n √D.
struct Quad {
  Rat x;
  Rat y;
};

// √D to a requested number of digits, found one digit at a time.
class NaiveRoot {
 public:
  NaiveRoot(Prime p, Int D, Branch branch) : p_(p), D_(std::move(D)), branch_(branch) {
    if (D_ == 0) return;
    Int u = D_;
    long v = 0;
    while (u % p_ == 0) {
      u /= p_;
      ++v;
    }
    if (v % 2 != 0) throw std::invalid_argument("oracle: sqrt(D) not in Q_p");
    unit_ = u;
    half_ = v / 2;
  }

  // r with v_p(√D - r) >= K (plus the exact power of p in √D).
  Int approx(long K) const {
    if (K <= 0) return 0;
    Int r;
    if (p_ == 2) {
      const Int m8 = ((unit_ % 8) + 8) % 8;
      if (m8 != 1) throw std::invalid_argument("oracle: sqrt(D) not in Q_2");
      r = 1;
      for (long j = 2; j < K; ++j) {
        const Int m = ipow(2, j + 2);
        Int diff = r * r - unit_;
        if (((diff % m) + m) % m != 0) r += ipow(2, j);
      }
      r %= ipow(2, std::max(K, 2L));
    } else {
      Int m = p_;
      long r0 = -1;
      for (long c = 1; c <= static_cast<long>(p_ / 2); ++c) {
        Int diff = Int(c) * c - unit_;
        if (((diff % m) + m) % m == 0) {
          r0 = c;
          break;
        }
      }
      if (r0 < 0) throw std::invalid_argument("oracle: sqrt(D) not in Q_p");
      r = r0;
      Int pj = p_;
      for (long j = 1; j < K; ++j) {
        const Int next = pj * p_;
        bool found = false;
        for (Prime d = 0; d < p_; ++d) {
          Int cand = r + Int(d) * pj;
          Int diff = cand * cand - unit_;
          if (((diff % next) + next) % next == 0) {
            r = cand;
            found = true;
            break;
          }
        }
        if (!found) throw std::logic_error("oracle: root lifting failed");
        pj = next;
      }
    }
    if (branch_ == Branch::kMinus) r = -r;
    return r * ipow(p_, half_);
  }

 private:
  Prime p_;
  Int D_;
  Branch branch_;
  Int unit_ = 0;
  long half_ = 0;
};

class NaiveField {
 public:
  NaiveField(Prime p, const Int& D, Branch branch) : p_(p), D_(D), root_(p, D, branch) {}

  // A rational agreeing with α mod p^N for some N > max(v_p(α), 0), and v_p(α).
  std::pair<Rat, long> approximant(const Quad& a) {
    if (a.y == 0) return {a.x, val(a.x, p_)};
    const long vy = val(a.y, p_);
    for (;;) {
      if (vy + K_ > 1) {
        const Rat approx = a.x + a.y * Rat(cached_root());
        const long v = val(approx, p_);
        if (v < vy + K_ && 0 < vy + K_) return {approx, v};
      }
      K_ *= 2;
      have_ = false;
    }
  }

  std::vector<long> digits_to_zero(const Quad& a, long* v_out) {
    auto [approx, v] = approximant(a);
    *v_out = v;
    if (v > 0) return {};
    return rational_digits(approx, p_, 0);
  }

  long valuation(const Quad& a) { return approximant(a).second; }

 private:
  const Int& cached_root() {
    if (!have_) {
      root_value_ = root_.approx(K_);
      have_ = true;
    }
    return root_value_;
  }

  Prime p_;
  Int D_;
  NaiveRoot root_;
  long K_ = 64;
  bool have_ = false;
  Int root_value_;
};

// Of s + k·step, the one nearest c; equal distances go to the larger |k|.
Rat nearest_shift(const Rat& base, const Rat& c, const Int& step) {
  const Rat u = (c - base) / Rat(step);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), u.get_num_mpz_t(), u.get_den_mpz_t());
  Rat best;
  Rat best_dist = -1;
  Int best_k = 0;
  for (Int k = f - 1; k <= f + 2; ++k) {
    const Rat cand = base + Rat(k * step);
    const Rat dist = abs(c - cand);
    if (best_dist < 0 || dist < best_dist || (dist == best_dist && abs(k) > abs(best_k))) {
      best = cand;
      best_dist = dist;
      best_k = k;
    }
  }
  return best;
}

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

class NaiveExpander {
 public:
  NaiveExpander(Prime p, const Surd& alpha, const AlgorithmId& alg)
      : p_(p), D_(alpha.D), alg_(alg), field_(p, alpha.D, alpha.branch) {
    state_.x = alpha.P / alpha.Q;
    state_.y = alpha.D == 0 ? Rat(0) : Rat(1) / alpha.Q;
  }

  const Quad& state() const { return state_; }
  long start_valuation() { return field_.valuation(state_); }

  Rat quotient(long n) {
    long v = 0;
    const std::vector<long> a = field_.digits_to_zero(state_, &v);
    Rat s = 0, t = 0;
    if (v <= 0) {
      Rat pw = Rat(1, 1) / Rat(ipow(p_, -v));
      for (std::size_t i = 0; i < a.size(); ++i) {
        const long idx = v + static_cast<long>(i);
        s += Rat(a[i]) * pw;
        if (idx < 0) t += Rat(a[i]) * pw;
        pw *= p_;
      }
    }
    const Rat c = state_.x;
    const Rat P(p_);
    using K = AlgorithmId::Kind;
    const bool even = n % 2 == 0;
    switch (alg_.kind) {
      case K::kMurru:
        return even ? s : t;
      case K::kBrowkin1: {
        if (even) return s;
        const Quad diff{state_.x - t, state_.y};
        if (field_.valuation(diff) == 0) return t;
        return t - sgn(t);
      }
      case K::kBrowkin4: {
        const Rat& base = even ? s : t;
        const Rat alt = even ? Rat(s - P * sgn(s)) : Rat(t - sgn(t));
        return abs(c - alt) < abs(c - base) ? alt : base;
      }
      case K::kNew:
        if (n == 0 || v >= 0) return nearest_shift(s, c, Int(p_));
        return nearest_shift(t, c, Int(1));
      case K::kNeww:
        return even ? nearest_shift(s, c, Int(p_)) : nearest_shift(t, c, Int(1));
      case K::kModified:
      case K::kRBlock:
        return n % alg_.phase_modulus() == 0 ? nearest_shift(s, c, Int(p_)) : nearest_shift(t, c, Int(1));
    }
    throw std::logic_error("oracle: unknown algorithm");
  }

  // α <- 1/(α - b); false when α = b.
  bool advance(const Rat& b) {
    const Rat dx = state_.x - b;
    const Rat norm = dx * dx - state_.y * state_.y * Rat(D_);
    if (norm == 0) return false;
    state_.x = dx / norm;
    state_.y = -state_.y / norm;
    return true;
  }

 private:
  Prime p_;
  Int D_;
  AlgorithmId alg_;
  NaiveField field_;
  Quad state_;
};

std::string str(const Rat& x) { return x.get_str(); }

void add_violation(Check& c, long index, std::string values) {
  c.passed = false;
  ++c.violation_count;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back({index, std::move(values)});
}

Check named(std::string name) {
  Check c;
  c.name = std::move(name);
  return c;
}

std::string subject_of(const Surd& alpha, const AlgorithmId& alg, Prime p) {
  std::ostringstream os;
  os << alg.name() << " p=" << p << " " << alpha.str();
  return os.str();
}

long ceil_log4_naive(const Int& q) {
  long k = 0;
  Int f = 1;
  while (f < q) {
    f *= 4;
    ++k;
  }
  return k;
}

long ceil_ln(const Int& q) {
  if (q <= 1) return 0;
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, q.get_mpz_t());
  return static_cast<long>(std::ceil(std::log(mant) + static_cast<double>(exp2) * std::log(2.0)));
}

}  // namespace

std::vector<long> rational_digits(const Rat& x, Prime p, long K) {
  if (x == 0) throw std::invalid_argument("rational_digits: x must be nonzero");
  const long v = val(x, p);
  std::vector<long> out;
  if (K < v) return out;
  Int num = x.get_num(), den = x.get_den();
  // Strip p^v so that num/den is a unit.
  for (long i = 0; i < v; ++i) num /= p;
  for (long i = 0; i < -v; ++i) den /= p;
  for (long idx = v; idx <= K; ++idx) {
    const long a = digit0(num, den, p);
    out.push_back(a);
    num = (num - Int(a) * den) / p;
  }
  return out;
}

Rat reconstruct_rational(const std::vector<PartialQuotient>& quotients) {
  if (quotients.empty()) throw std::invalid_argument("reconstruct_rational: empty list");
  Rat acc = quotients.back().to_rat();
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    if (acc == 0) throw std::domain_error("reconstruct_rational: zero tail");
    acc = it->to_rat() + Rat(1) / acc;
  }
  return acc;
}

bool AuditReport::ok() const {
  for (const auto& c : checks) {
    if (!c.informational && !c.passed) return false;
  }
  return true;
}

const Check* AuditReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AuditReport verify_period(Prime p, const Surd& alpha, const AlgorithmId& alg, const ExpansionResult& result) {
  if (result.kind != ResultKind::kPeriodic) {
    throw std::invalid_argument("verify_period: result is not periodic");
  }
  AuditReport rep;
  rep.subject = subject_of(alpha, alg, p);
  const long pre = result.preperiod, per = result.period, L = pre + per;
  const long m = alg.phase_modulus();

  Check quotients = named("quotients"), recurrence = named("recurrence"), repeat = named("repeat"),
        minimal = named("minimal");

  NaiveExpander ex(p, alpha, alg);
  // b_0 of new ignores the valuation rule, so α_0 only counts as a repeat
  // target when that rule would have picked s̄ anyway
  const bool start_alone = alg.kind == AlgorithmId::Kind::kNew && ex.start_valuation() < 0;
  std::map<std::tuple<Rat, Rat, long>, long> first;
  std::vector<Rat> b;
  for (long n = 0; n <= L + per; ++n) {
    if (n <= L) {
      const long phase = n == 0 && start_alone ? m : n % m;
      auto key = std::make_tuple(ex.state().x, ex.state().y, phase);
      auto [it, inserted] = first.emplace(key, n);
      if (!inserted) {
        if (n < L) {
          add_violation(minimal, n, "alpha_" + std::to_string(n) + " = alpha_" + std::to_string(it->second));
        } else if (it->second != pre) {
          add_violation(recurrence, n, "alpha_" + std::to_string(n) + " recurs at " + std::to_string(it->second));
        }
      } else if (n == L) {
        add_violation(recurrence, n, "alpha_" + std::to_string(L) + " is new");
      }
    }
    if (n == L + per) break;
    const Rat bn = ex.quotient(n);
    b.push_back(bn);
    if (n < L) {
      if (static_cast<std::size_t>(n) >= result.quotients.size()) {
        add_violation(quotients, n, "oracle " + str(bn) + " engine missing");
      } else {
        const Rat engine = result.quotients[static_cast<std::size_t>(n)].to_rat();
        if (bn != engine) add_violation(quotients, n, "oracle " + str(bn) + " engine " + str(engine));
      }
    } else if (bn != b[static_cast<std::size_t>(n - per)]) {
      add_violation(repeat, n, str(bn) + " vs " + str(b[static_cast<std::size_t>(n - per)]));
    }
    if (!ex.advance(bn)) {
      add_violation(recurrence, n, "expansion terminates");
      break;
    }
  }
  if (per % m != 0) add_violation(recurrence, L, "period not a multiple of the phase modulus");
  if (recurrence.passed) recurrence.witnesses.push_back({L, "pre=" + std::to_string(pre) + " period=" + std::to_string(per)});

  rep.checks = {quotients, recurrence, repeat, minimal};
  return rep;
}

AuditReport audit_bounds(const Surd& alpha, const AlgorithmId& alg, const ExpansionResult& result) {
  AuditReport rep;
  const Prime p = result.p;
  rep.subject = subject_of(alpha, alg, p);
  const auto& diag = result.diagnostics;
  const Int& D = result.start.D;
  const bool new_family = alg.kind == AlgorithmId::Kind::kNew || alg.kind == AlgorithmId::Kind::kNeww;
  const Rat p2(Int(p) * p);

  if (new_family && (p == 2 || p == 3) && D != 0 && !diag.empty()) {
    Check c = named("q_bound_p23");
    Rat M = p2 * Rat(abs(D)) / 4 + 1;
    M = std::max(M, Rat(abs(diag[0].Q)));
    if (diag.size() > 1) M = std::max(M, Rat(abs(diag[1].Q)));
    for (const auto& d : diag) {
      if (Rat(abs(d.Q)) > M) add_violation(c, d.n, "|Q|=" + to_string(Int(abs(d.Q))) + " M=" + str(M));
    }
    if (c.passed) c.witnesses.push_back({-1, "M=" + str(M)});
    rep.checks.push_back(c);
  }

  if (alg.kind == AlgorithmId::Kind::kModified && p <= 7 && D != 0 && !diag.empty()) {
    Check c = named("q_bound_block");
    Rat M = std::max(Rat(abs(diag[0].Q)), Rat(p2 * Rat(abs(D)) / 4 + 1));
    M = std::max(M, Rat(Rat(4) * (p2 + 1) / 3));
    const Rat bound = p2 * M / 4 + 1;
    for (const auto& d : diag) {
      if (Rat(abs(d.Q)) > bound) add_violation(c, d.n, "|Q|=" + to_string(Int(abs(d.Q))) + " bound=" + str(bound));
    }
    if (c.passed) c.witnesses.push_back({-1, "bound=" + str(bound)});
    rep.checks.push_back(c);
  }

  if (new_family && D == 0) {
    Check cp = named("contraction_P"), cq = named("contraction_Q");
    for (std::size_t n = 0; n + 2 < diag.size(); ++n) {
      const Int P1 = abs(diag[n + 1].P), P2 = abs(diag[n + 2].P);
      if (!(2 * P2 < P1)) add_violation(cp, static_cast<long>(n), "|P_n+1|=" + to_string(P1) + " |P_n+2|=" + to_string(P2));
      const Int Q0 = abs(diag[n].Q), Q2 = abs(diag[n + 2].Q);
      if (!(4 * Q2 < Q0)) add_violation(cq, static_cast<long>(n), "|Q_n|=" + to_string(Q0) + " |Q_n+2|=" + to_string(Q2));
    }
    rep.checks.push_back(cp);
    rep.checks.push_back(cq);

    if (result.kind == ResultKind::kFinite && !diag.empty()) {
      const Int Q0 = abs(diag[0].Q);
      const long steps = static_cast<long>(result.quotients.size());
      Check sb = named("step_bound");
      const long bound = 2 * ceil_log4_naive(Q0) + 2;
      if (steps > bound) add_violation(sb, steps, "steps=" + std::to_string(steps) + " bound=" + std::to_string(bound));
      else sb.witnesses.push_back({steps, "steps=" + std::to_string(steps) + " bound=" + std::to_string(bound)});
      rep.checks.push_back(sb);

      Check sl = named("step_bound_ln");
      sl.informational = true;
      const long lnb = ceil_ln(Q0) + 2;
      if (steps > lnb) add_violation(sl, steps, "steps=" + std::to_string(steps) + " bound=" + std::to_string(lnb));
      else sl.witnesses.push_back({steps, "steps=" + std::to_string(steps) + " bound=" + std::to_string(lnb)});
      rep.checks.push_back(sl);
    }
  }

  if (new_family) {
    Check c = named("valuation_pairs");
    for (std::size_t n = 1; n + 1 < diag.size(); ++n) {
      const long a = diag[n].vp_b, b = diag[n + 1].vp_b;
      const bool ok = a != kInfiniteValuation && b != kInfiniteValuation && a + b < 0;
      if (!ok) add_violation(c, static_cast<long>(n), "v(b_n)=" + std::to_string(a) + " v(b_n+1)=" + std::to_string(b));
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace padicfrac::oracle
