// ============================================================================
// exponents.hpp — asymptotic error exponents from scalar optimization
// ============================================================================
//
// The four exponents of the asymmetric testing problem, each a 1-D
// optimization of a function built from phi / phi_tilde:
//
//   stein_exponent          D(rho||sigma)
//   chernoff_bound          max_{0<=s<=1} -phi(s)
//   hoeffding_bound(r)      sup_{0<=s<1} (-s r - phi(s)) / (1 - s)
//   hoeffding_bound_tilde   same objective with phi_tilde
//
// plus the Legendre-type critical point s_r of the Hoeffding objective and
// its two self-consistency residuals.
//
// Optimizer contract: a 1001-point uniform grid (capped at s = 1 - 1e-6 for
// the singular objectives) followed by golden-section refinement of the
// bracketing interval.  Values that exceed 1e3 nats while still increasing at
// the cap are reported as diverged (+infinity), which genuinely occurs for
// pure-state rho.
// ============================================================================

#pragma once

#include "qht/state_space.hpp"

namespace qht {

inline constexpr double kOptGridPoints = 1001;
inline constexpr double kSCap = 1.0 - 1e-6;
inline constexpr double kDivergenceCeiling = 1e3;  // nats

struct BoundResult {
  double value = 0.0;    // +infinity when diverged
  double s_star = 0.0;   // optimizer location (grid/golden refined)
  bool diverged = false;
};

// Sampled exponent curve over a parameter grid (r for the Hoeffding-type
// bounds).  `values` holds +infinity where `diverged` is set.
struct ExponentCurve {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> s_star;
  std::vector<bool> diverged;
};

double stein_exponent(const HypothesisPair& pair);

BoundResult chernoff_bound(const HypothesisPair& pair);

// Throws ArgumentError for r < 0.
BoundResult hoeffding_bound(double r, const HypothesisPair& pair);
BoundResult hoeffding_bound_tilde(double r, const HypothesisPair& pair);

ExponentCurve hoeffding_curve(const std::vector<double>& r_grid,
                              const HypothesisPair& pair);
ExponentCurve hoeffding_curve_tilde(const std::vector<double>& r_grid,
                                    const HypothesisPair& pair);

// Maximizer s_r of the Hoeffding objective.  Interior optimizers are polished
// to machine precision by bisecting the stationarity condition
// r = (s-1) phi'(s) - phi(s), which is monotone in s by convexity of phi; the
// finite-n achievability checks need far more accuracy in s_r than the value
// optimization alone provides.
double critical_s(double r, const HypothesisPair& pair);

struct LegendreResiduals {
  double s_r = 0.0;
  double residual_rate = 0.0;   // |r - ((s_r - 1) phi'(s_r) - phi(s_r))|
  double residual_value = 0.0;  // |H(r) - (s_r phi'(s_r) - phi(s_r))|
  bool applicable = false;      // false at boundary optimizers
};

LegendreResiduals legendre_residuals(double r, const HypothesisPair& pair);

// Shared 1-D maximizer: uniform grid on [lo, hi] then golden-section on the
// bracketing interval.  Used by every bound above and by the channel module.
struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
  bool at_upper_edge = false;  // argmax landed on the last grid point
};

template <typename F>
ScalarMax maximize_on_grid(F&& f, double lo, double hi, int points = 1001) {
  double best = f(lo);
  int besti = 0;
  const int n = points;
  for (int i = 1; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double v = f(x);
    if (v > best) {
      best = v;
      besti = i;
    }
  }
  double a = lo + (hi - lo) * std::max(besti - 1, 0) / (n - 1);
  double b = lo + (hi - lo) * std::min(besti + 1, n - 1) / (n - 1);
  // Golden-section shrink of [a, b]; keeps the max inside by construction.
  const double gr = 0.6180339887498948482;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 90 && (b - a) > 1e-15; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  ScalarMax m;
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  if (fm >= best) {
    m.x = xm;
    m.value = fm;
  } else {
    m.x = lo + (hi - lo) * besti / (n - 1);
    m.value = best;
  }
  m.at_upper_edge = (besti == n - 1);
  return m;
}

}  // namespace qht
