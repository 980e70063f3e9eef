#include "qht/finite_n.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "qht/rng.hpp"

namespace qht {

namespace {

Matrix kron_power(const Matrix& m, int n) {
  Matrix r = m;
  for (int i = 1; i < n; ++i) r = kron(r, m);
  return r;
}

void check_unit_interval(double v, const char* what) {
  if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << what << " must lie in [0,1], got " << v;
    throw ArgumentError(os.str());
  }
}

}  // namespace

TestOperator build_test_with_power(int n, double a, double power,
                                   const HypothesisPair& pair, int dim_guard) {
  tensor_dim_checked(pair.dim(), n, dim_guard, "test construction");
  // (sigma e^{-a})^p per copy; the scale folds into the eigenvalues.
  const HermitianOperator sig_pow =
      fractional_power(pair.eig_sigma, power, std::exp(-a));
  const HermitianOperator rho_pow = fractional_power(pair.eig_rho, power);
  const Matrix diff = kron_power(sig_pow.m, n) - kron_power(rho_pow.m, n);
  TestOperator t = negative_part_projector(hermitian_unchecked(diff));
  t.copies = n;
  return t;
}

TestOperator build_test(int n, double a, double s, const HypothesisPair& pair,
                        int dim_guard) {
  check_unit_interval(s, "test parameter s");
  const double power = (s <= 0.5) ? 1.0 - s : s;
  return build_test_with_power(n, a, power, pair, dim_guard);
}

ErrorPair error_pair(const TestOperator& t, int n, const HypothesisPair& pair) {
  if (t.copies != n) {
    std::ostringstream os;
    os << "error probabilities: test is on " << t.copies
       << " copies but n = " << n;
    throw ArgumentError(os.str());
  }
  const HermitianOperator rn = tensor_power(pair.rho.op, n);
  const HermitianOperator sn = tensor_power(pair.sigma.op, n);
  if (rn.dim() != t.dim()) {
    std::ostringstream os;
    os << "error probabilities: dimension mismatch " << rn.dim() << " vs "
       << t.dim();
    throw ArgumentError(os.str());
  }
  const Matrix complement = Matrix::identity(t.dim()) - t.op.m;
  const cplx alpha = trace_product(rn.m, complement);
  const cplx beta = trace_product(sn.m, t.op.m);
  if (std::abs(alpha.imag()) > 1e-10 || std::abs(beta.imag()) > 1e-10)
    throw NumericError("error probabilities: imaginary residue above 1e-10");
  return ErrorPair{alpha.real(), beta.real()};
}

BoundSlacks verify_exponential_bounds(int n, double a, double s,
                                      const HypothesisPair& pair,
                                      int dim_guard) {
  check_unit_interval(s, "bound parameter s");
  const double f = phi(s, pair);
  const double beta_bound = std::exp(n * ((1.0 - s) * a + f));
  const double alpha_bound = std::exp(n * (-s * a + f));

  BoundSlacks out;
  {
    const TestOperator t = build_test_with_power(n, a, 1.0 - s, pair, dim_guard);
    const ErrorPair e = error_pair(t, n, pair);
    out.beta_complement_power = beta_bound - e.beta;
    out.alpha_complement_power = alpha_bound - e.alpha;
  }
  {
    const TestOperator t = build_test_with_power(n, a, s, pair, dim_guard);
    const ErrorPair e = error_pair(t, n, pair);
    out.beta_direct_power = beta_bound - e.beta;
    out.alpha_direct_power = alpha_bound - e.alpha;
  }
  return out;
}

namespace {

// Spectral data of Delta(lambda) = rho^(x)n - lambda sigma^(x)n together with
// the strict-positive-side test and its two pairings.  Consecutive thresholds
// differ little, so each decomposition warm-starts from the previous
// eigenbasis; the sweeps then touch only the slowly rotating subspace.
struct ThresholdScan {
  const Matrix& rn;
  const Matrix& sn;
  double sigma_norm2;  // ||sigma^(x)n||_2
  Matrix warm;         // eigenvectors of the previous decomposition

  struct Point {
    EigenDecomposition eig;
    double alpha_strict = 0.0;  // alpha of {Delta > cutoff}
  };

  Point decompose(double lambda) {
    const int d = rn.rows;
    const HermitianOperator delta =
        hermitian_unchecked(rn - cplx(lambda, 0.0) * sn);
    Point pt;
    pt.eig = (warm.rows == d) ? eigendecompose_warm(delta, warm)
                              : eigendecompose(delta);
    warm = pt.eig.eigenvectors;
    const double cut = pt.eig.zero_cutoff();
    std::vector<double> diag(d, 0.0);
    for (int k = 0; k < d; ++k) diag[k] = (pt.eig.eigenvalues[k] > cut) ? 1.0 : 0.0;
    const HermitianOperator p = rebuild(pt.eig, diag);
    pt.alpha_strict = 1.0 - trace_product(rn, p.m).real();
    return pt;
  }
};

}  // namespace

NpResult np_tradeoff(int n, double epsilon, const HypothesisPair& pair,
                     NpOrientation orientation, int dim_guard) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    std::ostringstream os;
    os << "trade-off: epsilon must lie in (0,1), got " << epsilon;
    throw ArgumentError(os.str());
  }
  if (orientation == NpOrientation::constrain_beta) {
    // min{alpha : beta <= eps} on (rho, sigma) equals
    // min{beta : alpha <= eps} on (sigma, rho).
    const HypothesisPair swapped = make_pair(pair.sigma, pair.rho);
    return np_tradeoff(n, epsilon, swapped, NpOrientation::constrain_alpha,
                       dim_guard);
  }
  tensor_dim_checked(pair.dim(), n, dim_guard, "trade-off");

  const HermitianOperator rn_op = tensor_power(pair.rho.op, n);
  const HermitianOperator sn_op = tensor_power(pair.sigma.op, n);
  double signorm = 0.0;
  for (double w : pair.eig_sigma.eigenvalues) signorm = std::max(signorm, w);
  ThresholdScan scan{rn_op.m, sn_op.m, std::pow(signorm, n), Matrix()};

  // alpha(lambda) is nondecreasing: larger lambda shrinks the projector and
  // rejects the null more often.  Find an upper bracket, then bisect.  The
  // last feasible spectral point is kept so the continuous-crossing case can
  // answer from the very measurements that established feasibility.
  double lo = 0.0, hi = 1.0;
  ThresholdScan::Point lo_pt;
  bool have_lo = false;
  while (true) {
    ThresholdScan::Point p = scan.decompose(hi);
    if (p.alpha_strict > epsilon) break;
    lo = hi;
    lo_pt = std::move(p);
    have_lo = true;
    hi *= 2.0;
    if (hi > 1e18)
      throw NumericError("trade-off: threshold bracket exceeded 1e18");
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    ThresholdScan::Point p = scan.decompose(mid);
    if (p.alpha_strict <= epsilon) {
      lo = mid;
      lo_pt = std::move(p);
      have_lo = true;
    } else {
      hi = mid;
    }
  }

  // Classify the kernel at the converged threshold.  The width accounts for
  // how far an eigenvalue can move across the final bisection interval plus
  // the solver's own eigenvalue error, so a jump of alpha(lambda) through
  // epsilon cannot hide between lo and hi.
  const double lambda = hi;
  const ThresholdScan::Point pt = scan.decompose(lambda);
  const int d = rn_op.dim();
  double fro = 0.0;
  for (double w : pt.eig.eigenvalues) fro += w * w;
  fro = std::sqrt(fro);
  const double kappa =
      std::max(pt.eig.zero_cutoff(), 4.0 * (hi - lo) * scan.sigma_norm2 +
                                         8.0 * kEigenOffFactor * fro + 1e-15);
  std::vector<double> dpos(d, 0.0), dker(d, 0.0);
  for (int k = 0; k < d; ++k) {
    const double w = pt.eig.eigenvalues[k];
    if (w > kappa)
      dpos[k] = 1.0;
    else if (std::abs(w) <= kappa)
      dker[k] = 1.0;
  }
  const HermitianOperator ppos = rebuild(pt.eig, dpos);
  const double alpha_hi = 1.0 - trace_product(rn_op.m, ppos.m).real();
  const double beta_lo = trace_product(sn_op.m, ppos.m).real();

  NpResult out;
  out.lambda = lambda;
  if (alpha_hi <= epsilon) {
    out.beta_star = beta_lo;
    out.achieved_alpha = alpha_hi;
    return out;
  }
  const HermitianOperator pker = rebuild(pt.eig, dker);
  const double ak = trace_product(rn_op.m, pker.m).real();
  const double bk = trace_product(sn_op.m, pker.m).real();
  if (ak > 0.0) {
    // Genuine jump of alpha(lambda): an eigenvalue sits at the threshold and a
    // randomized fraction of its eigenspace lands the constraint exactly.
    double c = (alpha_hi - epsilon) / ak;
    c = std::min(std::max(c, 0.0), 1.0);
    out.randomization = c;
    out.beta_star = beta_lo + c * bk;
    out.achieved_alpha = alpha_hi - c * ak;
    return out;
  }
  // No eigenvalue near zero: the pair does not commute at this threshold, the
  // positive eigenspace rotates continuously with lambda and alpha(lambda)
  // passes through epsilon without a jump.  The lower bracket end is feasible
  // (by its own stored measurement) and its beta is optimal to within the
  // converged bracket width.
  if (!have_lo) {
    lo_pt = scan.decompose(lo);
    if (lo_pt.alpha_strict > epsilon)
      throw NumericError(
          "trade-off: lower bracket end lost feasibility after convergence");
  }
  const double cut_lo = lo_pt.eig.zero_cutoff();
  std::vector<double> dlo(d, 0.0);
  for (int k = 0; k < d; ++k)
    dlo[k] = (lo_pt.eig.eigenvalues[k] > cut_lo) ? 1.0 : 0.0;
  const HermitianOperator plop = rebuild(lo_pt.eig, dlo);
  out.lambda = lo;
  out.beta_star = trace_product(sn_op.m, plop.m).real();
  out.achieved_alpha = lo_pt.alpha_strict;
  return out;
}

namespace {

EigenDecomposition decompose_psd_checked(const HermitianOperator& h,
                                         const char* role) {
  const EigenDecomposition e = eigendecompose(h);
  const double floor = -kPsdTolFactor * std::max(e.max_abs_eigenvalue(), 1e-300);
  for (double w : e.eigenvalues) {
    if (w < floor) {
      std::ostringstream os;
      os << role << " must be PSD: eigenvalue " << w << " below tolerance "
         << floor;
      throw NotPsdError(os.str());
    }
  }
  return e;
}

}  // namespace

double trace_split_gap(const HermitianOperator& x, const HermitianOperator& y,
                       double s) {
  if (!(s >= -1e-12 && s <= 0.5 + 1e-12))
    throw ArgumentError("trace split gap: s must lie in [0, 1/2]");
  if (x.dim() != y.dim())
    throw ArgumentError("trace split gap: dimension mismatch");
  const EigenDecomposition ex = decompose_psd_checked(x, "first operand");
  const EigenDecomposition ey = decompose_psd_checked(y, "second operand");

  const HermitianOperator xs = fractional_power(ex, s);
  const HermitianOperator y1s = fractional_power(ey, 1.0 - s);
  const double lhs = trace_product(xs.m, y1s.m).real();

  const HermitianOperator x1s = fractional_power(ex, 1.0 - s);
  const TestOperator pos =
      positive_part_projector(hermitian_unchecked(x1s.m - y1s.m));
  const Matrix neg = Matrix::identity(x.dim()) - pos.op.m;
  const double rhs = trace_product(pos.op.m, y.m).real() +
                     trace_product(neg, x.m).real();
  return lhs - rhs;
}

double power_pairing_gap(const HermitianOperator& a, const HermitianOperator& b,
                         double t) {
  if (!(t >= -1e-12 && t <= 1.0 + 1e-12))
    throw ArgumentError("power pairing gap: t must lie in [0, 1]");
  if (a.dim() != b.dim())
    throw ArgumentError("power pairing gap: dimension mismatch");
  const EigenDecomposition ea = decompose_psd_checked(a, "first operand");
  const EigenDecomposition eb = decompose_psd_checked(b, "second operand");

  const TestOperator pos =
      positive_part_projector(hermitian_unchecked(a.m - b.m));
  const HermitianOperator at = fractional_power(ea, t);
  const HermitianOperator bt = fractional_power(eb, t);
  const Matrix paired = multiply(b.m, at.m - bt.m);
  return trace_product(pos.op.m, paired).real();
}

SteinReport stein_convergence(double epsilon, int n_max,
                              const HypothesisPair& pair, int dim_guard) {
  if (n_max < 1) throw ArgumentError("convergence table: n_max must be >= 1");
  tensor_dim_checked(pair.dim(), n_max, dim_guard, "convergence table");

  SteinReport rep;
  rep.reference = relative_entropy(pair);
  for (int n = 1; n <= n_max; ++n) {
    const NpResult r = np_tradeoff(n, epsilon, pair,
                                   NpOrientation::constrain_alpha, dim_guard);
    SteinRow row;
    row.n = n;
    row.beta_star = r.beta_star;
    row.rate = -std::log(r.beta_star) / n;
    row.achieved_alpha = r.achieved_alpha;
    rep.rows.push_back(row);
  }

  // Small-s probe of the direct argument: at a = -D + delta, a small s makes
  // the alpha-side exponent negative while the beta-side exponent certifies a
  // rate of at least (D - delta)(1 - s).
  const double dval = rep.reference;
  if (std::isfinite(dval) && dval > 0.0) {
    const double delta = std::min(0.05, dval / 2.0);
    const double a = -dval + delta;
    rep.delta = delta;
    for (int i = 1; i <= 30; ++i) {
      const double s = 0.01 * i;
      const double ea = -s * a + phi(s, pair);
      const double eb = (1.0 - s) * a + phi(s, pair);
      if (ea < 0.0 && eb < -(dval - delta) * (1.0 - s)) {
        rep.small_s = s;
        rep.expr_alpha = ea;
        rep.expr_beta = eb;
        rep.small_s_found = true;
        break;
      }
    }
  }
  return rep;
}

namespace {

// Trace norm and operator norm of a PSD instance, for tolerance scaling.
double psd_trace_norm(const HermitianOperator& h) {
  return std::abs(trace(h.m).real());
}

double operator_norm(const HermitianOperator& h) {
  const EigenDecomposition e = eigendecompose(h);
  return e.max_abs_eigenvalue();
}

// Rank schedule mixing full-rank with rank-deficient instances.
int rank_for_trial(int trial, int dim) {
  if (dim > 1 && trial % 5 == 3) return dim - 1;
  if (dim > 1 && trial % 7 == 5) return std::max(1, dim / 2);
  if (dim > 1 && trial % 11 == 7) return 1;
  return dim;
}

template <typename GapFn>
GapSuiteResult run_gap_suite(std::uint64_t seed, int trials_per_dim,
                             double param_hi, GapFn&& gap_fn) {
  GapSuiteResult out;
  out.min_gap = std::numeric_limits<double>::infinity();
  out.min_margin = std::numeric_limits<double>::infinity();
  Rng rng(seed);
  for (int dim = 2; dim <= 6; ++dim) {
    GapSuiteRow row;
    row.dim = dim;
    row.trials = trials_per_dim;
    row.min_gap = std::numeric_limits<double>::infinity();
    row.min_margin = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials_per_dim; ++trial) {
      const HermitianOperator x =
          random_psd(rng, dim, rank_for_trial(trial, dim));
      const HermitianOperator y =
          random_psd(rng, dim, rank_for_trial(trial + 1, dim));
      const double param = param_hi * rng.uniform();
      const auto [gap, tol] = gap_fn(x, y, param);
      row.min_gap = std::min(row.min_gap, gap);
      row.min_margin = std::min(row.min_margin, gap + tol);
    }
    row.pass = row.min_margin >= 0.0;
    out.min_gap = std::min(out.min_gap, row.min_gap);
    out.min_margin = std::min(out.min_margin, row.min_margin);
    out.pass = out.pass && row.pass;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace

GapSuiteResult trace_split_suite(std::uint64_t seed, int trials_per_dim) {
  return run_gap_suite(
      seed, trials_per_dim, 0.5,
      [](const HermitianOperator& x, const HermitianOperator& y, double s) {
        const double gap = trace_split_gap(x, y, s);
        const double tol = 1e-10 * (psd_trace_norm(x) + psd_trace_norm(y));
        return std::pair<double, double>(gap, tol);
      });
}

GapSuiteResult power_pairing_suite(std::uint64_t seed, int trials_per_dim) {
  return run_gap_suite(
      seed, trials_per_dim, 1.0,
      [](const HermitianOperator& a, const HermitianOperator& b, double t) {
        const double gap = power_pairing_gap(a, b, t);
        const double tol = 1e-10 * psd_trace_norm(b) *
                           (std::pow(operator_norm(a), t) +
                            std::pow(operator_norm(b), t));
        return std::pair<double, double>(gap, tol);
      });
}

}  // namespace qht
