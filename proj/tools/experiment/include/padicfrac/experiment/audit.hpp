#pragma once

#include <functional>
#include <vector>

#include "padicfrac/experiment/config.hpp"
#include "padicfrac/oracle.hpp"

namespace padicfrac::experiment {

/// For every prime in cfg:
///   - engine digits against the rational digit oracle on cfg.rational_samples
///     random rationals (seeded from cfg.seed and p);
///   - reconstruct_rational on every Finite expansion of those rationals,
///     for each configured algorithm that accepts rationals;
///   - verify_period and audit_bounds for √D, D admissible in [d_min, d_max],
///     under each configured algorithm.
/// Reports come back in a fixed order regardless of the thread count.
std::vector<oracle::AuditReport> run_audit(const SweepConfig& cfg);

bool all_ok(const std::vector<oracle::AuditReport>& reports);

}  // namespace padicfrac::experiment
