// ============================================================================
// cli_runner.hpp — command-line front end as a library
// ============================================================================
//
// The CLI logic lives behind run_cli() so tests can drive it in-process and
// byte-compare report bodies.  Commands:
//
//   exponents  --pair FILE      divergences, Chernoff, Hoeffding-type curves
//   finite-n   --pair FILE      bound slacks, trade-off and convergence tables
//   channel    --channel FILE   averaged state, exponent curve, block checks
//   verify                      randomized trace-inequality suites only
//
// Exit codes: 0 success; 1 a mathematical check failed (the report names it);
// 2 malformed input or usage; 3 internal numeric failure.
// ============================================================================

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qht/report.hpp"

namespace qht {

struct RunConfig {
  std::string command;
  std::string pair_path;
  std::string channel_path;
  std::vector<double> r_grid;
  std::vector<double> a_grid;
  int n_max = 4;
  double epsilon = 0.1;
  std::uint64_t seed = 42;
  int suite_trials = 200;  // per dimension, for the in-report suites
  std::string out_path;
  ReportFormat format = ReportFormat::csv;
  bool bits = false;
};

// Parses "lo:hi:steps" (inclusive endpoints, steps points).
std::vector<double> parse_grid(const std::string& spec);

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qht
