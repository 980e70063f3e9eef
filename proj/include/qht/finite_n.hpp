// ============================================================================
// finite_n.hpp — explicit tests on tensor powers and exact trade-offs
// ============================================================================
//
// The finite-blocklength laboratory:
//
//   build_test            the explicit spectral-projector test on n copies
//   error_pair            exact first/second-kind error probabilities
//   verify_exponential_bounds
//                         slack of the two exponential bounds for both test
//                         constructions at a common parameter s
//   np_tradeoff           exact optimal beta under an alpha constraint
//                         (quantum Neyman-Pearson family + kernel
//                         randomization)
//   trace_split_gap       gap of Tr[X^s Y^{1-s}] over its projective-split
//                         lower bound (s in [0, 1/2])
//   power_pairing_gap     Tr[{A-B>=0} B (A^t - B^t)]  (t in [0,1])
//   stein_convergence     the -(1/n) log beta*_n(eps) table against
//                         D(rho||sigma), plus a small-s achievability check
// ============================================================================

#pragma once

#include <cstdint>
#include <vector>

#include "qht/exponents.hpp"
#include "qht/state_space.hpp"

namespace qht {

// The spectral test {(sigma^(x)n e^{-n a})^p - (rho^(x)n)^p < 0} with
// p = 1-s for s <= 1/2 and p = s for s > 1/2, so the power stays in [1/2, 1].
// Powers are taken per copy and then tensored (valid because tensor powers
// and fractional powers commute).
TestOperator build_test(int n, double a, double s, const HypothesisPair& pair,
                        int dim_guard = kDefaultDimGuard);

// Same construction with the power given explicitly (used to evaluate both
// the power-(1-s) and the power-s forms at a common s).
TestOperator build_test_with_power(int n, double a, double power,
                                   const HypothesisPair& pair,
                                   int dim_guard = kDefaultDimGuard);

struct ErrorPair {
  double alpha = 0.0;  // Tr[rho^(x)n (I - T)]  — first kind
  double beta = 0.0;   // Tr[sigma^(x)n T]      — second kind
};

// Throws ArgumentError when T's copy count or dimension does not match.
ErrorPair error_pair(const TestOperator& t, int n, const HypothesisPair& pair);

// Slacks (bound - achieved) of
//   beta  <= e^{n(1-s)a + n phi(s)}   and   alpha <= e^{-n s a + n phi(s)}
// for the two test constructions at parameter s: the complement-power form
// (power 1-s) and the direct-power form (power s).  All four must be
// >= -1e-9 on the verified grids.
struct BoundSlacks {
  double beta_complement_power = 0.0;
  double alpha_complement_power = 0.0;
  double beta_direct_power = 0.0;
  double alpha_direct_power = 0.0;

  double min() const {
    return std::min(std::min(beta_complement_power, alpha_complement_power),
                    std::min(beta_direct_power, alpha_direct_power));
  }
};

BoundSlacks verify_exponential_bounds(int n, double a, double s,
                                      const HypothesisPair& pair,
                                      int dim_guard = kDefaultDimGuard);

// Which error probability the epsilon constraint applies to.  The default
// constrains alpha (first kind) and minimizes beta, the orientation whose
// exponent is D(rho||sigma); the alternative swaps the roles.
enum class NpOrientation { constrain_alpha, constrain_beta };

struct NpResult {
  double beta_star = 0.0;       // minimized error probability
  double achieved_alpha = 0.0;  // constrained error after randomization
  double lambda = 0.0;          // threshold of the optimal test family
  double randomization = 0.0;   // kernel weight c in [0,1]
};

// Exact optimal trade-off over tests 0 <= T <= I: bisection on the threshold
// of {rho^(x)n - lambda sigma^(x)n > 0} plus a randomized fraction of the
// kernel eigenspace so the constrained error hits epsilon exactly.
NpResult np_tradeoff(int n, double epsilon, const HypothesisPair& pair,
                     NpOrientation orientation = NpOrientation::constrain_alpha,
                     int dim_guard = kDefaultDimGuard);

// LHS - RHS of
//   Tr[X^s Y^{1-s}] >= Tr[{X^{1-s}-Y^{1-s} >= 0} Y]
//                      + Tr[{X^{1-s}-Y^{1-s} < 0} X]
// for PSD X, Y and s in [0, 1/2]; nonnegative up to rounding scaled by the
// trace norms.
double trace_split_gap(const HermitianOperator& x, const HermitianOperator& y,
                       double s);

// Tr[{A-B >= 0} B (A^t - B^t)] for PSD A, B and t in [0,1]; nonnegative up to
// rounding scaled by ||B||_tr (||A||_2^t + ||B||_2^t).
double power_pairing_gap(const HermitianOperator& a, const HermitianOperator& b,
                         double t);

struct SteinRow {
  int n = 0;
  double beta_star = 0.0;
  double rate = 0.0;  // -(1/n) log beta*_n
  double achieved_alpha = 0.0;
};

struct SteinReport {
  std::vector<SteinRow> rows;
  double reference = 0.0;  // D(rho||sigma)
  // Small-s achievability probe at threshold a = -D + delta: the first s in
  // {0.01, ..., 0.30} where both exponent expressions certify decay.
  double delta = 0.0;
  double small_s = 0.0;
  double expr_alpha = 0.0;  // -s a + phi(s)         (must be < 0)
  double expr_beta = 0.0;   // (1-s) a + phi(s)      (must be < -(D-delta)(1-s))
  bool small_s_found = false;
};

SteinReport stein_convergence(double epsilon, int n_max,
                              const HypothesisPair& pair,
                              int dim_guard = kDefaultDimGuard);

// ---------------------------------------------------------------------------
// Randomized property suites over the two trace inequalities.  Instances are
// G G^dagger with complex standard-normal G (rank-deficient on a fixed
// schedule), dimensions 2..6, fully determined by the seed.  An instance
// passes when its gap stays above the rounding tolerance scaled by the
// instance's own norms; `min_margin` is the worst (gap - (-tolerance)).
// ---------------------------------------------------------------------------

struct GapSuiteRow {
  int dim = 0;
  int trials = 0;
  double min_gap = 0.0;
  double min_margin = 0.0;
  bool pass = true;
};

struct GapSuiteResult {
  std::vector<GapSuiteRow> rows;
  double min_gap = 0.0;
  double min_margin = 0.0;
  bool pass = true;
};

GapSuiteResult trace_split_suite(std::uint64_t seed, int trials_per_dim);
GapSuiteResult power_pairing_suite(std::uint64_t seed, int trials_per_dim);

}  // namespace qht
