#include "qht/state_space.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qht {

DensityMatrix make_density(const HermitianOperator& h) {
  const EigenDecomposition e = eigendecompose(h);
  const double floor = -kPsdTolFactor * std::max(e.max_abs_eigenvalue(), 1e-300);
  for (double w : e.eigenvalues) {
    if (w < floor) {
      std::ostringstream os;
      os << "density matrix must be PSD: eigenvalue " << w
         << " below tolerance " << floor;
      throw NotPsdError(os.str());
    }
  }
  const double tr = trace(h.m).real();
  if (std::abs(tr - 1.0) > kDensityTraceTol) {
    std::ostringstream os;
    os << "density matrix must have unit trace: got " << tr;
    throw ValidationError(os.str());
  }
  return DensityMatrix{h};
}

DensityMatrix diagonal_density(const std::vector<double>& probs) {
  const int d = static_cast<int>(probs.size());
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = probs[i];
  return make_density(hermitian_unchecked(m));
}

HypothesisPair make_pair(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "hypothesis pair: dimension mismatch " << rho.dim() << " vs "
       << sigma.dim();
    throw ArgumentError(os.str());
  }
  HypothesisPair p;
  p.rho = rho;
  p.sigma = sigma;
  p.eig_rho = eigendecompose(rho.op);
  p.eig_sigma = eigendecompose(sigma.op);
  p.cut_rho = p.eig_rho.zero_cutoff();
  p.cut_sigma = p.eig_sigma.zero_cutoff();

  const int d = rho.dim();
  p.overlap.assign(static_cast<size_t>(d) * d, 0.0);
  // O(i,j) = |<u_i|w_j>|^2 where u_i are rho's eigenvectors, w_j sigma's.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      cplx ip = 0.0;
      for (int k = 0; k < d; ++k)
        ip += std::conj(p.eig_rho.eigenvectors(k, i)) *
              p.eig_sigma.eigenvectors(k, j);
      p.overlap[static_cast<size_t>(i) * d + j] = std::norm(ip);
    }

  // support(rho) inside support(sigma): no rho-eigenvector with significant
  // eigenvalue may lean on sigma's kernel.
  double worst_leak = 0.0;
  for (int i = 0; i < d; ++i) {
    if (p.eig_rho.eigenvalues[i] <= p.cut_rho) continue;
    double leak = 0.0;
    for (int j = 0; j < d; ++j)
      if (p.eig_sigma.eigenvalues[j] <= p.cut_sigma) leak += p.ov(i, j);
    worst_leak = std::max(worst_leak, leak);
  }
  p.support_ok = worst_leak <= kSupportLeakTol;
  return p;
}

double relative_entropy(const HypothesisPair& pair) {
  if (!pair.support_ok) return std::numeric_limits<double>::infinity();
  const int d = pair.dim();
  double val = 0.0;
  for (int i = 0; i < d; ++i) {
    const double pi = pair.eig_rho.eigenvalues[i];
    if (pi <= pair.cut_rho) continue;
    val += pi * std::log(pi);
    for (int j = 0; j < d; ++j) {
      const double qj = pair.eig_sigma.eigenvalues[j];
      if (qj <= pair.cut_sigma) continue;
      val -= pi * pair.ov(i, j) * std::log(qj);
    }
  }
  return std::max(val, 0.0);
}

namespace {

void check_s_range(double s, const char* what) {
  if (!(s >= -1e-12 && s <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << what << ": s must lie in [0,1], got " << s;
    throw ArgumentError(os.str());
  }
}

// Tr[rho^{1-s} sigma^s] as the double sum over both spectra.
double trace_power_pairing(double s, const HypothesisPair& pair) {
  const int d = pair.dim();
  double f = 0.0;
  for (int i = 0; i < d; ++i) {
    const double pi = pair.eig_rho.eigenvalues[i];
    if (pi <= pair.cut_rho) continue;
    const double pp = std::pow(pi, 1.0 - s);
    for (int j = 0; j < d; ++j) {
      const double qj = pair.eig_sigma.eigenvalues[j];
      if (qj <= pair.cut_sigma) continue;
      f += pp * std::pow(qj, s) * pair.ov(i, j);
    }
  }
  return f;
}

[[noreturn]] void throw_degenerate(const char* what) {
  std::ostringstream os;
  os << what << ": trace underflowed to <= 0 (numerically disjoint supports)";
  throw DegenerateSupportError(os.str());
}

}  // namespace

double phi(double s, const HypothesisPair& pair) {
  check_s_range(s, "phi");
  const double f = trace_power_pairing(s, pair);
  if (!(f > 0.0)) throw_degenerate("phi");
  return std::log(f);
}

double phi_prime(double s, const HypothesisPair& pair) {
  check_s_range(s, "phi_prime");
  const int d = pair.dim();
  double f = 0.0, g = 0.0;
  for (int i = 0; i < d; ++i) {
    const double pi = pair.eig_rho.eigenvalues[i];
    if (pi <= pair.cut_rho) continue;
    const double pp = std::pow(pi, 1.0 - s);
    const double lp = std::log(pi);
    for (int j = 0; j < d; ++j) {
      const double qj = pair.eig_sigma.eigenvalues[j];
      if (qj <= pair.cut_sigma) continue;
      const double term = pp * std::pow(qj, s) * pair.ov(i, j);
      f += term;
      g += term * (std::log(qj) - lp);
    }
  }
  if (!(f > 0.0)) throw_degenerate("phi_prime");
  return g / f;
}

double phi_tilde(double s, const HypothesisPair& pair) {
  check_s_range(s, "phi_tilde");
  const HermitianOperator sig_half = fractional_power(pair.eig_sigma, s / 2.0);
  const HermitianOperator rho_neg = fractional_power(pair.eig_rho, -s);
  const Matrix inner = multiply(sig_half.m, multiply(rho_neg.m, sig_half.m));
  const double f = trace_product(pair.rho.op.m, inner).real();
  if (!(f > 0.0)) throw_degenerate("phi_tilde");
  return std::log(f);
}

}  // namespace qht
