#include "qht/exponents.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qht {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_rate(double r, const char* what) {
  if (!(r >= 0.0)) {
    std::ostringstream os;
    os << what << ": rate must be >= 0, got " << r;
    throw ArgumentError(os.str());
  }
}

// Generic Hoeffding-form optimization of (-s r - f(s)) / (1 - s) on
// [0, 1 - 1e-6] with divergence detection at the cap.
template <typename F>
BoundResult hoeffding_form(double r, F&& f) {
  auto objective = [&](double s) { return (-s * r - f(s)) / (1.0 - s); };
  const ScalarMax m = maximize_on_grid(objective, 0.0, kSCap);
  BoundResult b;
  if (m.value > kDivergenceCeiling && m.at_upper_edge) {
    b.value = kInf;
    b.s_star = kSCap;
    b.diverged = true;
    return b;
  }
  b.value = std::max(m.value, 0.0);  // s = 0 always yields 0
  b.s_star = m.x;
  return b;
}

}  // namespace

double stein_exponent(const HypothesisPair& pair) {
  return relative_entropy(pair);
}

BoundResult chernoff_bound(const HypothesisPair& pair) {
  auto objective = [&](double s) { return -phi(s, pair); };
  const ScalarMax m = maximize_on_grid(objective, 0.0, 1.0);
  BoundResult b;
  b.value = std::max(m.value, 0.0);
  b.s_star = m.x;
  return b;
}

BoundResult hoeffding_bound(double r, const HypothesisPair& pair) {
  check_rate(r, "hoeffding bound");
  return hoeffding_form(r, [&](double s) { return phi(s, pair); });
}

BoundResult hoeffding_bound_tilde(double r, const HypothesisPair& pair) {
  check_rate(r, "hoeffding bound (tilde)");
  return hoeffding_form(r, [&](double s) { return phi_tilde(s, pair); });
}

namespace {

ExponentCurve curve_from(const std::vector<double>& r_grid,
                         const HypothesisPair& pair, bool tilde) {
  ExponentCurve c;
  c.grid = r_grid;
  for (double r : r_grid) {
    const BoundResult b =
        tilde ? hoeffding_bound_tilde(r, pair) : hoeffding_bound(r, pair);
    c.values.push_back(b.value);
    c.s_star.push_back(b.s_star);
    c.diverged.push_back(b.diverged);
  }
  return c;
}

}  // namespace

ExponentCurve hoeffding_curve(const std::vector<double>& r_grid,
                              const HypothesisPair& pair) {
  return curve_from(r_grid, pair, false);
}

ExponentCurve hoeffding_curve_tilde(const std::vector<double>& r_grid,
                                    const HypothesisPair& pair) {
  return curve_from(r_grid, pair, true);
}

double critical_s(double r, const HypothesisPair& pair) {
  check_rate(r, "critical s");
  const BoundResult coarse = hoeffding_bound(r, pair);
  if (coarse.diverged) return coarse.s_star;

  // Stationarity: psi(s) = (s-1) phi'(s) - phi(s) - r decreases from D - r at
  // s = 0+ to -r at s = 1- (psi' = (s-1) phi'' <= 0 by convexity), so an
  // interior root exists exactly when 0 < r < D and bisection nails it.
  auto psi = [&](double s) {
    return (s - 1.0) * phi_prime(s, pair) - phi(s, pair) - r;
  };
  double lo = 1e-9, hi = 1.0 - 1e-9;
  double flo = psi(lo), fhi = psi(hi);
  if (!(flo > 0.0) || !(fhi < 0.0)) return coarse.s_star;  // boundary optimum
  for (int it = 0; it < 200 && (hi - lo) > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (psi(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

LegendreResiduals legendre_residuals(double r, const HypothesisPair& pair) {
  LegendreResiduals out;
  const BoundResult bound = hoeffding_bound(r, pair);
  const double s_r = critical_s(r, pair);
  out.s_r = s_r;
  if (bound.diverged || s_r <= 1e-6 || s_r >= 1.0 - 2e-6) {
    out.applicable = false;
    return out;
  }
  const double fp = phi_prime(s_r, pair);
  const double f = phi(s_r, pair);
  out.residual_rate = std::abs(r - ((s_r - 1.0) * fp - f));
  out.residual_value = std::abs(bound.value - (s_r * fp - f));
  out.applicable = true;
  return out;
}

}  // namespace qht
