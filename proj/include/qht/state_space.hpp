// ============================================================================
// state_space.hpp — density matrices and the scalar divergence family
// ============================================================================
//
// Validated quantum states and the functions of a state pair that every
// exponent is built from:
//
//   relative_entropy  D(rho||sigma) = Tr[rho (log rho - log sigma)]   (nats)
//   phi(s)            log Tr[rho^{1-s} sigma^s]
//   phi_prime(s)      d/ds phi, evaluated analytically on the supports
//   phi_tilde(s)      log Tr[rho sigma^{s/2} rho^{-s} sigma^{s/2}]
//
// A HypothesisPair caches both eigendecompositions plus the squared-overlap
// matrix O(i,j) = |<u_i|w_j>|^2, which turns every phi evaluation into an
// O(d^2) weighted sum — cheap enough for dense optimizer grids.
//
// All logarithms are natural; conversion to bits happens only at output.
// ============================================================================

#pragma once

#include <vector>

#include "qht/hermitian.hpp"

namespace qht {

inline constexpr double kDensityTraceTol = 1e-10;
inline constexpr double kSupportLeakTol = 1e-9;

struct DensityMatrix {
  HermitianOperator op;

  int dim() const { return op.dim(); }
};

// Validates PSD (eigenvalues >= -1e-10) and unit trace (within 1e-10).
DensityMatrix make_density(const HermitianOperator& h);

// Convenience for diagonal (classical) states.
DensityMatrix diagonal_density(const std::vector<double>& probs);

struct HypothesisPair {
  DensityMatrix rho;
  DensityMatrix sigma;
  EigenDecomposition eig_rho;
  EigenDecomposition eig_sigma;
  std::vector<double> overlap;  // row-major d x d: |<u_i|w_j>|^2
  double cut_rho = 0.0;         // zero cutoffs for the two spectra
  double cut_sigma = 0.0;
  bool support_ok = false;      // support(rho) inside support(sigma)?

  int dim() const { return rho.dim(); }
  double ov(int i, int j) const {
    return overlap[static_cast<size_t>(i) * dim() + j];
  }
};

// Throws ArgumentError on dimension mismatch.
HypothesisPair make_pair(const DensityMatrix& rho, const DensityMatrix& sigma);

// D(rho||sigma) in nats; +infinity when support(rho) leaks outside
// support(sigma); always >= 0.
double relative_entropy(const HypothesisPair& pair);

// log Tr[rho^{1-s} sigma^s] for s in [0,1].  Throws DegenerateSupportError if
// the trace underflows to <= 0 (orthogonal supports).
double phi(double s, const HypothesisPair& pair);

// Analytic derivative of phi on the supports; endpoints are one-sided limits.
double phi_prime(double s, const HypothesisPair& pair);

// log Tr[rho sigma^{s/2} rho^{-s} sigma^{s/2}] with rho^{-s} taken on the
// support of rho.
double phi_tilde(double s, const HypothesisPair& pair);

}  // namespace qht
