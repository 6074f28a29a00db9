#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "padicfrac/experiment/config.hpp"
#include "padicfrac/experiment/sweep.hpp"
#include "padicfrac/expansion.hpp"
#include "padicfrac/oracle.hpp"

namespace padicfrac::experiment {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "padicfrac/1";

/// Finite `[b0, b1, ...]`, periodic `[pre...; overline(period...)]`,
/// truncated `[b0, ..., b_{N-1}, ...]`.
std::string bracket(const ExpansionResult& r);
std::string bracket(const std::vector<PartialQuotient>& quotients);

/// Envelope with schema, input, algorithm, result kind, quotients and the
/// per-step diagnostics. Infinite valuations are written as null.
Json expansion_json(const Surd& input, const ExpansionResult& r);

Json audit_json(const oracle::AuditReport& report);

/// `# key=value` lines for the resolved config, then
/// `p,<algorithm names>,total` and one row per prime.
std::string table_csv(const SweepConfig& cfg, const std::vector<SweepRow>& rows);
Json table_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows);

}  // namespace padicfrac::experiment
