#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "padicfrac/experiment/config.hpp"
#include "padicfrac/expansion.hpp"
#include "padicfrac/prime_ctx.hpp"

namespace padicfrac::experiment {

/// D in [d_min, d_max], not a square, with √D in Q_p.
std::vector<long> admissible_d(const PrimeCtx& ctx, long d_min, long d_max);

struct CaseResult {
  Prime p = 0;
  long D = 0;
  AlgorithmId algorithm;
  ResultKind kind = ResultKind::kTruncated;
  long preperiod = 0;
  long period = 0;
};

struct SweepRow {
  Prime p = 0;
  std::vector<long> counts;  // periodic counts, parallel to config.algorithms
  long total = 0;

  /// Count for one algorithm; -1 when it was not part of the run.
  long count(const SweepConfig& cfg, const AlgorithmId& alg) const;
};

/// Whether alg's column only counts D with p ∤ D under cfg.
bool counts_units_only(const SweepConfig& cfg, const AlgorithmId& alg);

struct SweepOutput {
  std::vector<SweepRow> rows;     // sorted by p
  std::vector<CaseResult> cases;  // every (p, D, alg), in task order
};

/// Expands √D for every admissible D, prime and algorithm in cfg. Tasks run
/// on resolve_threads(cfg) workers; results are placed by task index, so the
/// output does not depend on scheduling.
SweepOutput run_sweep(const SweepConfig& cfg);

/// Runs fn(i) for i in [0, n) on `threads` workers. The first exception is
/// rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace padicfrac::experiment
