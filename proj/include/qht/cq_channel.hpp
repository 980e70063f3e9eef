// ============================================================================
// cq_channel.hpp — classical-quantum channels and the random-coding exponent
// ============================================================================
//
// A channel maps a finite alphabet to signal states x -> rho_x.  For an input
// distribution p the module provides:
//
//   sigma_p             the averaged output state
//   block_operators     block-diagonal densities R (blocks p_x rho_x) and
//                       S_p (blocks p_x sigma_p) on the k*d space
//   phi_p(s)            log sum_x p_x Tr[rho_x^{1-s} sigma_p^s]
//                       (equal to log Tr[R^{1-s} S_p^s]; checked in tests)
//   channel_exponent    E_p(a) = max_{0<=s<=1} (-s a - phi_p(s))
//   holevo_quantity     sum_x p_x D(rho_x || sigma_p), the rate where the
//                       exponent hits zero
//   optimize_input      heuristic maximization of E_p(a) over p
//   finite_blocklength_check
//                       the two error terms of the hypothesis-testing bound
//                       on the block pair against their exponential bounds
// ============================================================================

#pragma once

#include <vector>

#include "qht/exponents.hpp"
#include "qht/finite_n.hpp"
#include "qht/state_space.hpp"

namespace qht {

inline constexpr int kAlphabetGuard = 8;
inline constexpr double kProbSumTol = 1e-12;

struct CQChannel {
  std::vector<DensityMatrix> letters;

  int alphabet() const { return static_cast<int>(letters.size()); }
  int dim() const { return letters.empty() ? 0 : letters[0].dim(); }
};

// Validates nonempty letters of equal dimension.
CQChannel make_channel(std::vector<DensityMatrix> letters);

struct InputDistribution {
  std::vector<double> p;
};

// Validates nonnegativity and unit sum (within 1e-12).
InputDistribution make_distribution(std::vector<double> p);
InputDistribution uniform_distribution(int k);

DensityMatrix sigma_p(const CQChannel& ch, const InputDistribution& p);

struct BlockOperators {
  DensityMatrix r;    // blocks p_x rho_x
  DensityMatrix s_p;  // blocks p_x sigma_p
};

BlockOperators block_operators(const CQChannel& ch, const InputDistribution& p);

// Cached per-letter spectral data for dense s-grids: phi_p(s) becomes a sum
// of k overlap pairings.
struct ChannelContext {
  CQChannel channel;
  InputDistribution p;
  DensityMatrix avg;                    // sigma_p
  std::vector<HypothesisPair> letter_pairs;  // (rho_x, sigma_p) per letter
};

ChannelContext make_channel_context(const CQChannel& ch,
                                    const InputDistribution& p);

double phi_p(double s, const ChannelContext& ctx);
double phi_p(double s, const CQChannel& ch, const InputDistribution& p);

// Throws ArgumentError for a < 0.
BoundResult channel_exponent(double a, const ChannelContext& ctx);
BoundResult channel_exponent(double a, const CQChannel& ch,
                             const InputDistribution& p);

double holevo_quantity(const ChannelContext& ctx);
double holevo_quantity(const CQChannel& ch, const InputDistribution& p);

struct InputOptimum {
  std::vector<double> p_star;
  double exponent = 0.0;
  bool heuristic = true;  // multi-start coordinate ascent, no global claim
};

// Maximizes channel_exponent over the simplex by multi-start projected
// coordinate ascent (step 1/50, halved to 1e-4).  Deterministic; alphabet
// size capped at kAlphabetGuard.
InputOptimum optimize_input(double a, const CQChannel& ch);

// Error terms of the random-coding bound at blocklength n, rate a, parameter
// s: the block-pair test is built at threshold -a, and each term must stay
// below its constant times e^{n(s a + phi_p(s))}.
struct BlockCheck {
  double term_alpha = 0.0;   // 2 * Tr[R^(x)n (I - T)]
  double term_beta = 0.0;    // 4 e^{n a} * Tr[S_p^(x)n T]
  double per_term_bound = 0.0;  // e^{n(s a + phi_p(s))}
  double slack_alpha = 0.0;  // 2 * bound - term_alpha
  double slack_beta = 0.0;   // 4 * bound - term_beta
  double achieved_exponent = 0.0;   // -(1/n) log(term_alpha + term_beta)
  double reference_exponent = 0.0;  // channel_exponent(a)
};

BlockCheck finite_blocklength_check(int n, double a, double s,
                                    const CQChannel& ch,
                                    const InputDistribution& p,
                                    int dim_guard = kDefaultDimGuard);

}  // namespace qht
