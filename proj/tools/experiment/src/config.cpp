#include "padicfrac/experiment/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace padicfrac::experiment {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: " + key + " expects an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config: " + key + " expects true/false, got '" + value + "'");
}

}  // namespace

long SweepConfig::max_steps(const AlgorithmId& alg, Prime p) const {
  if (auto it = max_steps_by.find(alg.name()); it != max_steps_by.end()) return it->second;
  if (max_steps_all > 0) return max_steps_all;
  if (alg.kind == AlgorithmId::Kind::kNeww && p <= 31) return 5000;
  return 1000;
}

void SweepConfig::validate() const {
  for (Prime p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("config: " + std::to_string(p) + " is not prime");
  }
  if (d_min < 1 || d_max < d_min) throw std::invalid_argument("config: need 1 <= d_min <= d_max");
  if (algorithms.empty()) throw std::invalid_argument("config: no algorithms");
  if (max_steps_all < 0) throw std::invalid_argument("config: max_steps must be >= 1");
  for (const auto& [name, cap] : max_steps_by) {
    if (cap < 1) throw std::invalid_argument("config: max_steps." + name + " must be >= 1");
  }
  if (rational_samples < 0) throw std::invalid_argument("config: rational_samples must be >= 0");
}

std::vector<std::string> SweepConfig::describe() const {
  std::vector<std::string> out;
  std::string ps, as;
  for (Prime p : primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
  for (const auto& a : algorithms) as += (as.empty() ? "" : ",") + a.name();
  out.push_back("primes=" + ps);
  out.push_back("d_min=" + std::to_string(d_min));
  out.push_back("d_max=" + std::to_string(d_max));
  out.push_back("algorithms=" + as);
  for (const auto& a : algorithms) {
    std::string caps;
    for (Prime p : primes) caps += (caps.empty() ? "" : ",") + std::to_string(max_steps(a, p));
    out.push_back("max_steps." + a.name() + "=" + caps);
  }
  out.push_back("baseline_units_only=" + std::string(baseline_units_only ? "true" : "false"));
  out.push_back("seed=" + std::to_string(seed));
  out.push_back("rational_samples=" + std::to_string(rational_samples));
  return out;
}

std::vector<Prime> parse_primes(const std::string& text) {
  std::vector<Prime> out;
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      const long lo = parse_long("primes", trim(item.substr(0, dash)));
      const long hi = parse_long("primes", trim(item.substr(dash + 1)));
      if (lo < 2 || hi < lo) throw std::invalid_argument("config: bad prime range '" + item + "'");
      for (long q = lo; q <= hi; ++q) {
        if (is_prime(static_cast<Prime>(q))) out.push_back(static_cast<Prime>(q));
      }
    } else {
      const long q = parse_long("primes", item);
      if (q < 2 || !is_prime(static_cast<Prime>(q))) {
        throw std::invalid_argument("config: " + item + " is not prime");
      }
      out.push_back(static_cast<Prime>(q));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AlgorithmId> parse_algorithms(const std::string& text) {
  std::vector<AlgorithmId> out;
  for (const auto& item : split(text, ',')) {
    auto alg = AlgorithmId::parse(item);
    if (!alg) throw std::invalid_argument("config: unknown algorithm '" + item + "'");
    out.push_back(*alg);
  }
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  if (text == "text") return OutputFormat::kText;
  throw std::invalid_argument("config: unknown format '" + text + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kText: return "text";
  }
  return "?";
}

void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "primes") {
    cfg.primes = parse_primes(value);
  } else if (key == "d_min") {
    cfg.d_min = parse_long(key, value);
  } else if (key == "d_max") {
    cfg.d_max = parse_long(key, value);
  } else if (key == "algorithms") {
    cfg.algorithms = parse_algorithms(value);
  } else if (key == "max_steps") {
    cfg.max_steps_all = parse_long(key, value);
    if (cfg.max_steps_all < 1) throw std::invalid_argument("config: max_steps must be >= 1");
  } else if (key.rfind("max_steps.", 0) == 0) {
    const std::string name = key.substr(10);
    auto alg = AlgorithmId::parse(name);
    if (!alg) throw std::invalid_argument("config: unknown algorithm in '" + key + "'");
    cfg.max_steps_by[alg->name()] = parse_long(key, value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "threads") {
    const long t = parse_long(key, value);
    if (t < 0) throw std::invalid_argument("config: threads must be >= 0");
    cfg.threads = static_cast<unsigned>(t);
  } else if (key == "seed") {
    try {
      cfg.seed = std::stoull(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: seed expects an unsigned integer");
    }
  } else if (key == "rational_samples") {
    cfg.rational_samples = parse_long(key, value);
  } else if (key == "baseline_units_only") {
    cfg.baseline_units_only = parse_bool(key, value);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void load_config(SweepConfig& cfg, std::istream& in) {
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void load_config_file(SweepConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  load_config(cfg, in);
}

unsigned resolve_threads(const SweepConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("PADICFRAC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace padicfrac::experiment
