#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "padicfrac/algorithm.hpp"
#include "padicfrac/arith.hpp"

namespace padicfrac::experiment {

enum class OutputFormat { kCsv, kJson, kText };

/// Everything that determines a sweep or audit run.
///
/// Text form is one `key = value` per line, `#` starts a comment:
///   primes                3,5,7 or 3-31 (all primes in the range)
///   d_min, d_max          D range, inclusive
///   algorithms            comma list, e.g. murru,browkin1,neww,modified
///   max_steps             cap for every algorithm and prime
///   max_steps.<alg>       cap for one algorithm
///   format                csv | json | text
///   threads               worker count, 0 = automatic
///   seed                  seed for randomized audit corpora
///   rational_samples      random rationals per prime in audits
///   baseline_units_only   true | false
struct SweepConfig {
  std::vector<Prime> primes{3, 5, 7};
  long d_min = 1;
  long d_max = 1000;
  std::vector<AlgorithmId> algorithms{AlgorithmId::murru(), AlgorithmId::browkin1(), AlgorithmId::neww(),
                                      AlgorithmId::modified()};
  long max_steps_all = 0;                    // 0 = protocol defaults
  std::map<std::string, long> max_steps_by;  // algorithm name -> cap
  OutputFormat format = OutputFormat::kCsv;
  unsigned threads = 0;
  std::uint64_t seed = 20240611;
  long rational_samples = 100;
  /// Count murru/browkin1/browkin4 only over D with p ∤ D (the total and the
  /// other columns still use every admissible D).
  bool baseline_units_only = true;

  /// Cap for (alg, p): explicit per-algorithm value, else max_steps_all, else
  /// 5000 for neww with p <= 31 and 1000 otherwise.
  long max_steps(const AlgorithmId& alg, Prime p) const;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;

  /// Resolved settings as `key=value` lines (threads omitted so output does
  /// not depend on parallelism).
  std::vector<std::string> describe() const;
};

/// Applies one setting; throws std::invalid_argument on unknown keys or bad values.
void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value);

/// Reads `key = value` lines into cfg.
void load_config(SweepConfig& cfg, std::istream& in);
void load_config_file(SweepConfig& cfg, const std::string& path);

std::vector<Prime> parse_primes(const std::string& text);
std::vector<AlgorithmId> parse_algorithms(const std::string& text);
OutputFormat parse_format(const std::string& text);
std::string to_string(OutputFormat f);

/// Worker count: cfg.threads if nonzero, else PADICFRAC_THREADS if set and
/// positive, else the hardware concurrency (at least 1).
unsigned resolve_threads(const SweepConfig& cfg);

}  // namespace padicfrac::experiment
