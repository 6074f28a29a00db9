#include "padicfrac/experiment/render.hpp"

#include <sstream>

namespace padicfrac::experiment {

using padicfrac::to_string;
namespace {

std::string join(const std::vector<PartialQuotient>& q, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ", ";
    out += q[i].str();
  }
  return out;
}

Json valuation(long v) { return v == kInfiniteValuation ? Json(nullptr) : Json(v); }

Json config_json(const SweepConfig& cfg) {
  Json c = Json::object();
  for (const auto& line : cfg.describe()) {
    const auto eq = line.find('=');
    c[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return c;
}

}  // namespace

std::string bracket(const std::vector<PartialQuotient>& quotients) {
  return "[" + join(quotients, 0, quotients.size()) + "]";
}

std::string bracket(const ExpansionResult& r) {
  const auto& q = r.quotients;
  switch (r.kind) {
    case ResultKind::kFinite:
      return bracket(q);
    case ResultKind::kPeriodic: {
      const auto pre = static_cast<std::size_t>(r.preperiod);
      const auto end = static_cast<std::size_t>(r.preperiod + r.period);
      std::string out = "[" + join(q, 0, pre);
      if (pre > 0) out += "; ";
      out += "overline(" + join(q, pre, end) + ")]";
      return out;
    }
    case ResultKind::kTruncated:
      return "[" + join(q, 0, q.size()) + (q.empty() ? "...]" : ", ...]");
  }
  return "[]";
}

Json expansion_json(const Surd& input, const ExpansionResult& r) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "expansion";
  j["p"] = r.p;
  j["algorithm"] = r.algorithm.name();
  j["input"] = {{"P", to_string(input.P)},
                {"Q", to_string(input.Q)},
                {"D", to_string(input.D)},
                {"branch", input.branch == Branch::kPlus ? "plus" : "minus"}};
  j["normalized"] = {{"P", to_string(r.start.P)}, {"Q", to_string(r.start.Q)}, {"D", to_string(r.start.D)}};
  j["kind"] = to_string(r.kind);
  j["preperiod"] = r.preperiod;
  j["period"] = r.period;
  j["steps"] = r.quotients.size();
  j["bracket"] = bracket(r);
  Json qs = Json::array();
  for (const auto& b : r.quotients) qs.push_back(b.str());
  j["quotients"] = qs;
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) {
    diags.push_back({{"n", d.n},
                     {"vp_alpha", valuation(d.vp_alpha)},
                     {"vp_b", valuation(d.vp_b)},
                     {"P", to_string(d.P)},
                     {"Q", to_string(d.Q)},
                     {"vp_B", valuation(d.vp_B)}});
  }
  j["diagnostics"] = diags;
  return j;
}

Json audit_json(const oracle::AuditReport& report) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "audit";
  j["subject"] = report.subject;
  j["ok"] = report.ok();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json w = Json::array();
    for (const auto& x : c.witnesses) w.push_back({{"index", x.index}, {"values", x.values}});
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"informational", c.informational},
                      {"violations", c.violation_count},
                      {"witnesses", w}});
  }
  j["checks"] = checks;
  return j;
}

std::string table_csv(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  for (const auto& line : cfg.describe()) os << "# " << line << "\n";
  os << "p";
  for (const auto& a : cfg.algorithms) os << "," << a.name();
  os << ",total\n";
  for (const auto& row : rows) {
    os << row.p;
    for (long c : row.counts) os << "," << c;
    os << "," << row.total << "\n";
  }
  return os.str();
}

Json table_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = "table";
  j["config"] = config_json(cfg);
  Json rs = Json::array();
  for (const auto& row : rows) {
    Json counts = Json::object();
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) counts[cfg.algorithms[i].name()] = row.counts[i];
    rs.push_back({{"p", row.p}, {"counts", counts}, {"total", row.total}});
  }
  j["rows"] = rs;
  return j;
}

}  // namespace padicfrac::experiment
