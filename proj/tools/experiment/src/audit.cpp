#include "padicfrac/experiment/audit.hpp"

#include <memory>
#include <random>

#include "padicfrac/experiment/sweep.hpp"
#include "padicfrac/floor_functions.hpp"

namespace padicfrac::experiment {

using padicfrac::to_string;
namespace {

constexpr std::uint64_t kRationalBound = 1'000'000'000'000ULL;

std::vector<Rat> random_rationals(std::uint64_t seed, Prime p, long count) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * p));
  std::uniform_int_distribution<std::uint64_t> mag(1, kRationalBound);
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    Int num(std::to_string(mag(rng)));
    const Int den(std::to_string(mag(rng)));
    if (rng() & 1) num = -num;
    out.push_back(make_rat(num, den));
  }
  return out;
}

void fail(oracle::Check& c, long index, std::string values) {
  c.passed = false;
  ++c.violation_count;
  if (c.witnesses.size() < 8) c.witnesses.push_back({index, std::move(values)});
}

oracle::AuditReport digit_report(const PrimeCtx& ctx, const std::vector<Rat>& xs) {
  oracle::AuditReport rep;
  rep.subject = "digits p=" + std::to_string(ctx.p()) + " samples=" + std::to_string(xs.size());
  oracle::Check c;
  c.name = "digit_oracle";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rat& x = xs[i];
    const long v = vp(x, ctx.p());
    const long K = std::max(v, 0L) + 24;
    const auto engine = digits(ctx, Surd::rational(x), v, K);
    const auto naive = oracle::rational_digits(x, ctx.p(), K);
    if (engine != naive) fail(c, static_cast<long>(i), to_string(x));
  }
  rep.checks.push_back(c);
  return rep;
}

oracle::AuditReport reconstruct_report(const PrimeCtx& ctx, const AlgorithmId& alg, const SweepConfig& cfg,
                                       const std::vector<Rat>& xs) {
  oracle::AuditReport rep;
  rep.subject = "reconstruct " + alg.name() + " p=" + std::to_string(ctx.p());
  oracle::Check c;
  c.name = "reconstruct";
  long finite = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto r = expand(ctx, Surd::rational(xs[i]), alg, cfg.max_steps(alg, ctx.p()));
    if (r.kind != ResultKind::kFinite) continue;
    ++finite;
    const Rat back = oracle::reconstruct_rational(r.quotients);
    if (back != xs[i]) fail(c, static_cast<long>(i), to_string(xs[i]) + " -> " + to_string(back));
  }
  c.witnesses.insert(c.witnesses.begin(), {-1, "finite=" + std::to_string(finite)});
  rep.checks.push_back(c);
  return rep;
}

}  // namespace

std::vector<oracle::AuditReport> run_audit(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<std::unique_ptr<PrimeCtx>> ctxs;
  std::vector<std::vector<long>> ds;
  std::vector<std::vector<Rat>> samples;
  for (Prime p : cfg.primes) {
    ctxs.push_back(std::make_unique<PrimeCtx>(p));
    ds.push_back(admissible_d(*ctxs.back(), cfg.d_min, cfg.d_max));
    samples.push_back(random_rationals(cfg.seed, p, cfg.rational_samples));
  }

  // Task list in output order: per prime, digits, reconstruction per
  // algorithm, then (D, algorithm) pairs.
  struct Task {
    int kind;  // 0 digits, 1 reconstruct, 2 surd
    std::size_t prime_index;
    std::size_t alg_index;
    long D;
  };
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < cfg.primes.size(); ++pi) {
    if (!samples[pi].empty()) tasks.push_back({0, pi, 0, 0});
    for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) {
      if (!cfg.algorithms[ai].quadratic_only() && !samples[pi].empty()) tasks.push_back({1, pi, ai, 0});
    }
    for (long D : ds[pi]) {
      for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) tasks.push_back({2, pi, ai, D});
    }
  }

  std::vector<oracle::AuditReport> reports(tasks.size());
  parallel_for(tasks.size(), resolve_threads(cfg), [&](std::size_t i) {
    const Task& t = tasks[i];
    const PrimeCtx& ctx = *ctxs[t.prime_index];
    const AlgorithmId& alg = cfg.algorithms[t.alg_index];
    if (t.kind == 0) {
      reports[i] = digit_report(ctx, samples[t.prime_index]);
    } else if (t.kind == 1) {
      reports[i] = reconstruct_report(ctx, alg, cfg, samples[t.prime_index]);
    } else {
      const Surd alpha = Surd::sqrt(Int(t.D));
      const auto r = expand(ctx, alpha, alg, cfg.max_steps(alg, ctx.p()));
      oracle::AuditReport rep = oracle::audit_bounds(alpha, alg, r);
      if (r.kind == ResultKind::kPeriodic) {
        const auto vp_rep = oracle::verify_period(ctx.p(), alpha, alg, r);
        rep.checks.insert(rep.checks.end(), vp_rep.checks.begin(), vp_rep.checks.end());
      }
      reports[i] = std::move(rep);
    }
  });
  return reports;
}

bool all_ok(const std::vector<oracle::AuditReport>& reports) {
  for (const auto& r : reports) {
    if (!r.ok()) return false;
  }
  return true;
}

}  // namespace padicfrac::experiment
