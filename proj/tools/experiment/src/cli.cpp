#include "padicfrac/experiment/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "padicfrac/experiment/audit.hpp"
#include "padicfrac/experiment/config.hpp"
#include "padicfrac/experiment/render.hpp"
#include "padicfrac/experiment/sweep.hpp"

namespace padicfrac::experiment {

using padicfrac::to_string;
namespace {

struct ExpandOptions {
  unsigned long p = 0;
  std::string alg = "neww";
  std::optional<std::string> num, den, sqrt_d, P, Q, D;
  std::string branch = "plus";
  long max_steps = 1000;
  std::string format = "text";
};

struct SweepOptions {
  std::optional<std::string> config, primes, algorithms, format, output, seed;
  std::optional<long> d_min, d_max, max_steps, threads, rationals;
  bool all_d = false;
};

Rat require_rat(const std::string& what, const std::string& text) {
  auto r = parse_rat(text);
  if (!r) throw std::invalid_argument(what + ": cannot parse '" + text + "'");
  return *r;
}

Int require_int(const std::string& what, const std::string& text) {
  const Rat r = require_rat(what, text);
  if (r.get_den() != 1) throw std::invalid_argument(what + ": expected an integer");
  return r.get_num();
}

int cmd_expand(const ExpandOptions& o, std::ostream& out) {
  if (!is_prime(o.p)) throw std::invalid_argument("--p: " + std::to_string(o.p) + " is not prime");
  const auto alg = AlgorithmId::parse(o.alg);
  if (!alg) throw std::invalid_argument("--alg: unknown algorithm '" + o.alg + "'");
  if (o.max_steps < 1) throw std::invalid_argument("--max-steps must be >= 1");
  Branch branch;
  if (o.branch == "plus") branch = Branch::kPlus;
  else if (o.branch == "minus") branch = Branch::kMinus;
  else throw std::invalid_argument("--branch: expected plus or minus");

  const int forms = (o.num ? 1 : 0) + (o.sqrt_d ? 1 : 0) + (o.D ? 1 : 0);
  if (forms != 1) throw std::invalid_argument("give exactly one of --num, --sqrt, or --P/--Q/--D");
  if (o.den && !o.num) throw std::invalid_argument("--den needs --num");
  if ((o.P || o.Q) && !o.D) throw std::invalid_argument("--P/--Q need --D");

  Surd alpha;
  if (o.num) {
    const Rat num = require_rat("--num", *o.num);
    const Rat den = o.den ? require_rat("--den", *o.den) : Rat(1);
    if (den == 0) throw std::invalid_argument("--den must be nonzero");
    alpha = Surd::rational(num / den);
  } else if (o.sqrt_d) {
    alpha = Surd::sqrt(require_int("--sqrt", *o.sqrt_d), branch);
  } else {
    alpha.P = o.P ? require_rat("--P", *o.P) : Rat(0);
    alpha.Q = o.Q ? require_rat("--Q", *o.Q) : Rat(1);
    alpha.D = require_int("--D", *o.D);
    alpha.branch = branch;
  }

  const PrimeCtx ctx(o.p);
  validate(ctx, alpha);
  const ExpansionResult r = expand(ctx, alpha, *alg, o.max_steps);

  if (o.format == "json") {
    out << expansion_json(alpha, r).dump(2) << "\n";
  } else if (o.format == "text") {
    out << bracket(r) << "\n";
    out << "kind=" << to_string(r.kind);
    if (r.kind == ResultKind::kPeriodic) out << " pre=" << r.preperiod << " period=" << r.period;
    out << " steps=" << r.quotients.size() << "\n";
  } else {
    throw std::invalid_argument("--format: expected text or json");
  }
  return kExitOk;
}

SweepConfig resolve(const SweepOptions& o) {
  SweepConfig cfg;
  if (o.config) load_config_file(cfg, *o.config);
  if (o.primes) apply_setting(cfg, "primes", *o.primes);
  if (o.d_min) cfg.d_min = *o.d_min;
  if (o.d_max) cfg.d_max = *o.d_max;
  if (o.algorithms) apply_setting(cfg, "algorithms", *o.algorithms);
  if (o.max_steps) apply_setting(cfg, "max_steps", std::to_string(*o.max_steps));
  if (o.format) apply_setting(cfg, "format", *o.format);
  if (o.threads) apply_setting(cfg, "threads", std::to_string(*o.threads));
  if (o.seed) apply_setting(cfg, "seed", *o.seed);
  if (o.rationals) apply_setting(cfg, "rational_samples", std::to_string(*o.rationals));
  if (o.all_d) cfg.baseline_units_only = false;
  cfg.validate();
  return cfg;
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::invalid_argument("--output: cannot open " + *path);
  f << text;
}

int cmd_table(const SweepOptions& o, std::ostream& out) {
  const SweepConfig cfg = resolve(o);
  const SweepOutput res = run_sweep(cfg);
  const std::string text =
      cfg.format == OutputFormat::kJson ? table_json(cfg, res.rows).dump(2) + "\n" : table_csv(cfg, res.rows);
  emit(o.output, text, out);
  return kExitOk;
}

int cmd_audit(const SweepOptions& o, std::ostream& out) {
  SweepConfig cfg;
  SweepOptions opts = o;
  cfg = resolve(opts);
  const auto reports = run_audit(cfg);
  long failed = 0;
  std::string text;
  for (const auto& r : reports) {
    if (!r.ok()) ++failed;
  }
  if (cfg.format == OutputFormat::kJson) {
    for (const auto& r : reports) text += audit_json(r).dump() + "\n";
    Json summary;
    summary["schema"] = kSchema;
    summary["type"] = "audit_summary";
    summary["reports"] = reports.size();
    summary["failed"] = failed;
    text += summary.dump() + "\n";
  } else {
    for (const auto& line : cfg.describe()) text += "# " + line + "\n";
    for (const auto& r : reports) {
      if (r.ok()) continue;
      for (const auto& c : r.checks) {
        if (c.passed || c.informational) continue;
        text += "FAIL " + r.subject + " " + c.name;
        if (!c.witnesses.empty()) {
          text += " at " + std::to_string(c.witnesses.front().index) + ": " + c.witnesses.front().values;
        }
        text += "\n";
      }
    }
    text += "audit: " + std::to_string(reports.size()) + " reports, " + std::to_string(failed) + " failed\n";
  }
  emit(o.output, text, out);
  return failed == 0 ? kExitOk : kExitAuditFailure;
}

void add_sweep_flags(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--config", o.config, "key = value config file");
  cmd->add_option("--primes", o.primes, "e.g. 3,5,7 or 3-31");
  cmd->add_option("--d-min", o.d_min, "smallest D");
  cmd->add_option("--d-max", o.d_max, "largest D");
  cmd->add_option("--algorithms", o.algorithms, "comma-separated algorithm names");
  cmd->add_option("--max-steps", o.max_steps, "step cap for every algorithm");
  cmd->add_option("--threads", o.threads, "worker threads (0 = PADICFRAC_THREADS or all cores)");
  cmd->add_option("--output", o.output, "write to a file instead of stdout");
  cmd->add_flag("--all-d", o.all_d, "count murru/browkin columns over every admissible D");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic continued fractions of rationals and quadratic irrationals", "padicfrac"};
  app.require_subcommand(1);

  ExpandOptions eo;
  auto* expand_cmd = app.add_subcommand("expand", "expand one number");
  expand_cmd->add_option("--p", eo.p, "prime")->required();
  expand_cmd->add_option("--alg", eo.alg, "browkin1|browkin4|murru|new|neww|modified|rblock<r>");
  expand_cmd->add_option("--num", eo.num, "numerator (or a/b)");
  expand_cmd->add_option("--den", eo.den, "denominator");
  expand_cmd->add_option("--sqrt", eo.sqrt_d, "expand sqrt(D)");
  expand_cmd->add_option("--P", eo.P, "P in (P + sqrt(D))/Q");
  expand_cmd->add_option("--Q", eo.Q, "Q in (P + sqrt(D))/Q");
  expand_cmd->add_option("--D", eo.D, "D in (P + sqrt(D))/Q");
  expand_cmd->add_option("--branch", eo.branch, "plus|minus");
  expand_cmd->add_option("--max-steps", eo.max_steps, "step cap");
  expand_cmd->add_option("--format", eo.format, "text|json");

  SweepOptions to;
  auto* table_cmd = app.add_subcommand("table", "count periodic sqrt(D) per prime and algorithm");
  add_sweep_flags(table_cmd, to);
  table_cmd->add_option("--format", to.format, "csv|json");

  SweepOptions ao;
  auto* audit_cmd = app.add_subcommand("audit", "check the engine against the reference oracles");
  add_sweep_flags(audit_cmd, ao);
  audit_cmd->add_option("--format", ao.format, "text|json");
  audit_cmd->add_option("--rationals", ao.rationals, "random rationals per prime");
  audit_cmd->add_option("--seed", ao.seed, "seed for the random corpus");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "padicfrac: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (expand_cmd->parsed()) return cmd_expand(eo, out);
    if (table_cmd->parsed()) return cmd_table(to, out);
    if (audit_cmd->parsed()) return cmd_audit(ao, out);
  } catch (const std::invalid_argument& e) {
    err << "padicfrac: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "padicfrac: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace padicfrac::experiment
