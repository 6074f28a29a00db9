#include "padicfrac/experiment/sweep.hpp"

#include <algorithm>
#include <memory>

namespace padicfrac::experiment {

std::vector<long> admissible_d(const PrimeCtx& ctx, long d_min, long d_max) {
  std::vector<long> out;
  for (long D = std::max(1L, d_min); D <= d_max; ++D) {
    const Int d(D);
    if (is_perfect_square(d)) continue;
    if (ctx.sqrt_in_qp(d)) out.push_back(D);
  }
  return out;
}

long SweepRow::count(const SweepConfig& cfg, const AlgorithmId& alg) const {
  for (std::size_t i = 0; i < cfg.algorithms.size() && i < counts.size(); ++i) {
    if (cfg.algorithms[i] == alg) return counts[i];
  }
  return -1;
}

bool counts_units_only(const SweepConfig& cfg, const AlgorithmId& alg) {
  using K = AlgorithmId::Kind;
  return cfg.baseline_units_only && (alg.kind == K::kMurru || alg.kind == K::kBrowkin1 || alg.kind == K::kBrowkin4);
}

SweepOutput run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<Prime> primes = cfg.primes;
  std::sort(primes.begin(), primes.end());

  // One context per prime, built before any worker starts.
  std::vector<std::unique_ptr<PrimeCtx>> ctxs;
  std::vector<std::vector<long>> ds;
  for (Prime p : primes) {
    ctxs.push_back(std::make_unique<PrimeCtx>(p));
    ds.push_back(admissible_d(*ctxs.back(), cfg.d_min, cfg.d_max));
  }

  struct Task {
    std::size_t prime_index;
    long D;
    std::size_t alg_index;
  };
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    for (long D : ds[pi]) {
      for (std::size_t ai = 0; ai < cfg.algorithms.size(); ++ai) tasks.push_back({pi, D, ai});
    }
  }

  SweepOutput out;
  out.cases.resize(tasks.size());
  parallel_for(tasks.size(), resolve_threads(cfg), [&](std::size_t i) {
    const Task& t = tasks[i];
    const Prime p = primes[t.prime_index];
    const AlgorithmId& alg = cfg.algorithms[t.alg_index];
    const ExpansionResult r = expand(*ctxs[t.prime_index], Surd::sqrt(Int(t.D)), alg, cfg.max_steps(alg, p));
    out.cases[i] = CaseResult{p, t.D, alg, r.kind, r.preperiod, r.period};
  });

  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    SweepRow row;
    row.p = primes[pi];
    row.total = static_cast<long>(ds[pi].size());
    row.counts.assign(cfg.algorithms.size(), 0);
    out.rows.push_back(row);
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const AlgorithmId& alg = cfg.algorithms[t.alg_index];
    if (out.cases[i].kind != ResultKind::kPeriodic) continue;
    if (counts_units_only(cfg, alg) && t.D % static_cast<long>(primes[t.prime_index]) == 0) continue;
    ++out.rows[t.prime_index].counts[t.alg_index];
  }
  return out;
}

}  // namespace padicfrac::experiment
