#include "qht/cli_runner.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qht/cq_channel.hpp"
#include "qht/exponents.hpp"
#include "qht/finite_n.hpp"
#include "qht/io_json.hpp"
#include "qht/state_space.hpp"

namespace qht {

namespace {

constexpr double kSlackFloor = -1e-9;
constexpr double kResidualCeil = 1e-6;
constexpr double kDominanceFloor = -1e-9;

std::string fmt(double v) { return format_number(v); }

// Tracks failed mathematical checks for the exit code and the report summary.
struct CheckLog {
  std::vector<std::string> failed;

  void require(bool ok, const std::string& name) {
    if (!ok) failed.push_back(name);
  }
  bool pass() const { return failed.empty(); }
};

void finish_report(ReportBuilder& rb, const CheckLog& checks) {
  rb.add_scalar("checks", checks.pass() ? "pass" : "fail");
  for (const std::string& name : checks.failed)
    rb.add_scalar("failed_check", name);
}

void meta_section(ReportBuilder& rb, const RunConfig& cfg,
                  const std::string& input) {
  rb.add_scalar("command", cfg.command);
  if (!input.empty()) rb.add_scalar("input", input);
  rb.add_scalar("units", cfg.bits ? "bits" : "nats");
  rb.add_scalar("seed", std::to_string(cfg.seed));
}

// ---------------------------------------------------------------------------
// exponents
// ---------------------------------------------------------------------------

int run_exponents(const RunConfig& cfg, std::ostream& out) {
  const HypothesisPair pair = load_pair(cfg.pair_path);
  ReportBuilder rb(cfg.format);
  CheckLog checks;
  meta_section(rb, cfg, cfg.pair_path);

  const bool b = cfg.bits;
  const double d = stein_exponent(pair);
  const BoundResult ch = chernoff_bound(pair);
  rb.add_scalar("support_ok", pair.support_ok ? "true" : "false");
  rb.add_scalar("relative_entropy", fmt(to_output_units(d, b)));
  rb.add_scalar("chernoff", fmt(to_output_units(ch.value, b)));
  rb.add_scalar("chernoff_s_star", fmt(ch.s_star));

  rb.begin_section("hoeffding_curve", {"r", "bound", "s_star", "flag"});
  const ExponentCurve hc = hoeffding_curve(cfg.r_grid, pair);
  for (size_t i = 0; i < hc.grid.size(); ++i)
    rb.add_row({fmt(to_output_units(hc.grid[i], b)),
                fmt(to_output_units(hc.values[i], b)), fmt(hc.s_star[i]),
                hc.diverged[i] ? "inf" : "finite"});

  rb.begin_section("tilde_curve", {"r", "bound", "s_star", "flag"});
  const ExponentCurve tc = hoeffding_curve_tilde(cfg.r_grid, pair);
  for (size_t i = 0; i < tc.grid.size(); ++i)
    rb.add_row({fmt(to_output_units(tc.grid[i], b)),
                fmt(to_output_units(tc.values[i], b)), fmt(tc.s_star[i]),
                tc.diverged[i] ? "inf" : "finite"});

  // The bound built from phi dominates the tilde variant wherever both are
  // finite; a diverged phi bound dominates everything.
  for (size_t i = 0; i < hc.grid.size(); ++i) {
    if (hc.diverged[i]) continue;
    const double tv = tc.diverged[i] ? hc.values[i] : tc.values[i];
    checks.require(hc.values[i] >= tv + kDominanceFloor,
                   "dominance at r=" + fmt(hc.grid[i]));
  }

  rb.begin_section("legendre",
                   {"r", "s_r", "residual_rate", "residual_value", "applicable"});
  for (double r : cfg.r_grid) {
    const LegendreResiduals lr = legendre_residuals(r, pair);
    rb.add_row({fmt(to_output_units(r, b)), fmt(lr.s_r),
                fmt(to_output_units(lr.residual_rate, b)),
                fmt(to_output_units(lr.residual_value, b)),
                lr.applicable ? "yes" : "no"});
    if (lr.applicable) {
      checks.require(lr.residual_rate <= kResidualCeil &&
                         lr.residual_value <= kResidualCeil,
                     "legendre residuals at r=" + fmt(r));
    }
  }

  finish_report(rb, checks);
  emit_report(rb.str(), cfg.out_path, out);
  return checks.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// finite-n
// ---------------------------------------------------------------------------

void suite_section(ReportBuilder& rb, CheckLog& checks, const std::string& name,
                   const GapSuiteResult& suite) {
  rb.begin_section(name, {"dim", "trials", "min_gap", "min_margin", "pass"});
  for (const GapSuiteRow& row : suite.rows)
    rb.add_row({std::to_string(row.dim), std::to_string(row.trials),
                fmt(row.min_gap), fmt(row.min_margin),
                row.pass ? "yes" : "no"});
  checks.require(suite.pass, name);
}

int run_finite_n(const RunConfig& cfg, std::ostream& out) {
  const HypothesisPair pair = load_pair(cfg.pair_path);
  ReportBuilder rb(cfg.format);
  CheckLog checks;
  meta_section(rb, cfg, cfg.pair_path);
  rb.add_scalar("epsilon", fmt(cfg.epsilon));
  rb.add_scalar("n_max", std::to_string(cfg.n_max));

  rb.begin_section("bound_slacks",
                   {"n", "s", "a", "beta_complement_power",
                    "alpha_complement_power", "beta_direct_power",
                    "alpha_direct_power", "min_slack"});
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= cfg.n_max; ++n)
    for (int si = 1; si <= 9; ++si) {
      const double s = 0.1 * si;
      for (double a : cfg.a_grid) {
        const BoundSlacks bs = verify_exponential_bounds(n, a, s, pair);
        worst_slack = std::min(worst_slack, bs.min());
        rb.add_row({std::to_string(n), fmt(s), fmt(a),
                    fmt(bs.beta_complement_power), fmt(bs.alpha_complement_power),
                    fmt(bs.beta_direct_power), fmt(bs.alpha_direct_power),
                    fmt(bs.min())});
      }
    }
  rb.add_scalar("worst_slack", fmt(worst_slack));
  checks.require(worst_slack >= kSlackFloor, "exponential bound slacks");

  rb.begin_section("tradeoff", {"n", "beta_star", "rate", "achieved_alpha"});
  for (int n = 1; n <= cfg.n_max; ++n) {
    const NpResult np = np_tradeoff(n, cfg.epsilon, pair);
    rb.add_row({std::to_string(n), fmt(np.beta_star),
                fmt(to_output_units(-std::log(np.beta_star) / n, cfg.bits)),
                fmt(np.achieved_alpha)});
  }

  const SteinReport stein = stein_convergence(cfg.epsilon, cfg.n_max, pair);
  rb.add_scalar("stein_reference", fmt(to_output_units(stein.reference, cfg.bits)));
  rb.begin_section("stein", {"n", "beta_star", "rate", "achieved_alpha"});
  for (const SteinRow& row : stein.rows)
    rb.add_row({std::to_string(row.n), fmt(row.beta_star),
                fmt(to_output_units(row.rate, cfg.bits)),
                fmt(row.achieved_alpha)});
  if (std::isfinite(stein.reference) && stein.reference > 0.0) {
    rb.add_scalar("small_s", fmt(stein.small_s));
    rb.add_scalar("small_s_alpha_exponent", fmt(stein.expr_alpha));
    rb.add_scalar("small_s_beta_exponent", fmt(stein.expr_beta));
    checks.require(stein.small_s_found, "small-s achievability probe");
  }

  suite_section(rb, checks, "trace_split_suite",
                trace_split_suite(cfg.seed, cfg.suite_trials));
  suite_section(rb, checks, "power_pairing_suite",
                power_pairing_suite(cfg.seed, cfg.suite_trials));

  finish_report(rb, checks);
  emit_report(rb.str(), cfg.out_path, out);
  return checks.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// channel
// ---------------------------------------------------------------------------

int run_channel(const RunConfig& cfg, std::ostream& out) {
  const ChannelFile cf = load_channel(cfg.channel_path);
  const ChannelContext ctx = make_channel_context(cf.channel, cf.p);
  ReportBuilder rb(cfg.format);
  CheckLog checks;
  meta_section(rb, cfg, cfg.channel_path);

  const bool b = cfg.bits;
  const int k = cf.channel.alphabet();
  rb.add_scalar("alphabet", std::to_string(k));
  rb.add_scalar("letter_dim", std::to_string(cf.channel.dim()));
  const double holevo = holevo_quantity(ctx);
  rb.add_scalar("holevo", fmt(to_output_units(holevo, b)));

  rb.begin_section("exponent_curve", {"a", "exponent", "s_star"});
  std::vector<double> evals;
  for (double a : cfg.a_grid) {
    const BoundResult e = channel_exponent(a, ctx);
    evals.push_back(e.value);
    rb.add_row({fmt(to_output_units(a, b)), fmt(to_output_units(e.value, b)),
                fmt(e.s_star)});
  }
  // Convex nonincreasing curve that vanishes beyond the averaged divergence.
  for (size_t i = 1; i < evals.size(); ++i)
    checks.require(evals[i] <= evals[i - 1] + 1e-10,
                   "exponent curve monotone at a=" + fmt(cfg.a_grid[i]));
  for (size_t i = 2; i < evals.size(); ++i)
    checks.require(evals[i] - 2 * evals[i - 1] + evals[i - 2] >= -1e-8,
                   "exponent curve convex at a=" + fmt(cfg.a_grid[i - 1]));
  const double above = channel_exponent(1.1 * holevo, ctx).value;
  rb.add_scalar("exponent_above_holevo", fmt(to_output_units(above, b)));
  checks.require(above <= 1e-9, "exponent vanishes above the averaged divergence");

  if (k <= kAlphabetGuard) {
    rb.begin_section("input_optimization", {"a", "exponent", "p_star"});
    for (double a : cfg.a_grid) {
      const InputOptimum opt = optimize_input(a, cf.channel);
      std::ostringstream ps;
      for (size_t i = 0; i < opt.p_star.size(); ++i) {
        if (i) ps << " ";
        ps << fmt(opt.p_star[i]);
      }
      rb.add_row({fmt(to_output_units(a, b)),
                  fmt(to_output_units(opt.exponent, b)), ps.str()});
    }
  }

  rb.begin_section("blocklength_check",
                   {"n", "s", "a", "term_alpha", "term_beta", "per_term_bound",
                    "slack_alpha", "slack_beta", "achieved_exponent",
                    "reference_exponent"});
  const double a_chk = 0.5 * holevo;
  for (int n = 1; n <= 2; ++n) {
    double block_dim = 1.0;
    for (int i = 0; i < n; ++i) block_dim *= k * cf.channel.dim();
    if (block_dim > kDefaultDimGuard) continue;
    for (double s : {0.3, 0.5}) {
      const BlockCheck bc = finite_blocklength_check(n, a_chk, s, cf.channel, cf.p);
      rb.add_row({std::to_string(n), fmt(s), fmt(to_output_units(a_chk, b)),
                  fmt(bc.term_alpha), fmt(bc.term_beta), fmt(bc.per_term_bound),
                  fmt(bc.slack_alpha), fmt(bc.slack_beta),
                  fmt(to_output_units(bc.achieved_exponent, b)),
                  fmt(to_output_units(bc.reference_exponent, b))});
      checks.require(bc.slack_alpha >= kSlackFloor &&
                         bc.slack_beta >= kSlackFloor,
                     "blocklength term bounds at n=" + std::to_string(n) +
                         " s=" + fmt(s));
    }
  }

  finish_report(rb, checks);
  emit_report(rb.str(), cfg.out_path, out);
  return checks.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const RunConfig& cfg, std::ostream& out) {
  ReportBuilder rb(cfg.format);
  CheckLog checks;
  meta_section(rb, cfg, "");
  rb.add_scalar("trials_per_dim", std::to_string(cfg.suite_trials));
  suite_section(rb, checks, "trace_split_suite",
                trace_split_suite(cfg.seed, cfg.suite_trials));
  suite_section(rb, checks, "power_pairing_suite",
                power_pairing_suite(cfg.seed, cfg.suite_trials));
  finish_report(rb, checks);
  emit_report(rb.str(), cfg.out_path, out);
  return checks.pass() ? 0 : 1;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw ValidationError("grid must be lo:hi:steps, got \"" + spec + "\"");
  double lo, hi;
  long steps;
  try {
    size_t u0, u1, u2;
    lo = std::stod(parts[0], &u0);
    hi = std::stod(parts[1], &u1);
    steps = std::stol(parts[2], &u2);
    if (u0 != parts[0].size() || u1 != parts[1].size() || u2 != parts[2].size())
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ValidationError("grid must be lo:hi:steps with numeric fields, got \"" +
                          spec + "\"");
  }
  if (steps < 1 || steps > 100000)
    throw ValidationError("grid steps must lie in [1, 100000]");
  if (steps == 1) {
    if (lo != hi)
      throw ValidationError("grid with 1 step needs lo == hi");
    return {lo};
  }
  if (!(hi > lo)) throw ValidationError("grid needs hi > lo");
  std::vector<double> g;
  for (long i = 0; i < steps; ++i)
    g.push_back(lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
  return g;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"asymptotic error exponents for quantum hypothesis testing"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string r_spec = "0.005:0.1:20";
  std::string a_spec;
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed for randomized suites");
    sub->add_option("--out", cfg.out_path, "report file (default: stdout)");
    sub->add_option("--format", format, "report format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--bits", cfg.bits, "emit exponents in bits instead of nats");
  };

  CLI::App* exponents = app.add_subcommand(
      "exponents", "divergences and exponent curves for a state pair");
  exponents->add_option("--pair", cfg.pair_path, "pair JSON file")->required();
  exponents->add_option("--r-grid", r_spec, "rate grid lo:hi:steps");
  add_common(exponents);

  CLI::App* finite_n = app.add_subcommand(
      "finite-n", "finite-blocklength bounds and trade-off tables");
  finite_n->add_option("--pair", cfg.pair_path, "pair JSON file")->required();
  finite_n->add_option("--a-grid", a_spec, "threshold grid lo:hi:steps");
  finite_n->add_option("--n-max", cfg.n_max, "largest copy count")
      ->check(CLI::Range(1, 12));
  finite_n->add_option("--epsilon", cfg.epsilon, "error constraint in (0,1)");
  finite_n->add_option("--trials", cfg.suite_trials,
                       "trials per dimension for the inequality suites");
  add_common(finite_n);

  CLI::App* channel = app.add_subcommand(
      "channel", "random-coding exponent for a classical-quantum channel");
  channel->add_option("--channel", cfg.channel_path, "channel JSON file")
      ->required();
  channel->add_option("--a-grid", a_spec, "rate grid lo:hi:steps");
  add_common(channel);

  CLI::App* verify =
      app.add_subcommand("verify", "randomized trace-inequality suites");
  verify->add_option("--trials", cfg.suite_trials, "trials per dimension");
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.format = (format == "json") ? ReportFormat::json : ReportFormat::csv;
    cfg.r_grid = parse_grid(r_spec);
    if (exponents->parsed()) {
      cfg.command = "exponents";
      return run_exponents(cfg, out);
    }
    if (finite_n->parsed()) {
      cfg.command = "finite-n";
      cfg.a_grid = parse_grid(a_spec.empty() ? "-0.2:0.2:3" : a_spec);
      return run_finite_n(cfg, out);
    }
    if (channel->parsed()) {
      cfg.command = "channel";
      cfg.a_grid = parse_grid(a_spec.empty() ? "0:0.5:11" : a_spec);
      return run_channel(cfg, out);
    }
    cfg.command = "verify";
    return run_verify(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace qht
