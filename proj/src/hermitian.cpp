#include "qht/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qht {

namespace {

std::string entry_pair_str(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ") vs (" << j << "," << i << ")";
  return os.str();
}

Matrix symmetrized(const Matrix& m) {
  Matrix r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  // Diagonal entries of a Hermitian matrix are real; drop rounding residue.
  for (int i = 0; i < m.rows; ++i) r(i, i) = cplx(r(i, i).real(), 0.0);
  return r;
}

}  // namespace

HermitianOperator make_hermitian(const Matrix& m) {
  if (!m.square() || m.rows < 1)
    throw ValidationError("operator must be square with dim >= 1");
  const double tol = kHermTolFactor * std::max(max_abs_entry(m), 1e-300);
  double worst = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i; j < m.cols; ++j) {
      const double dev = std::abs(m(i, j) - std::conj(m(j, i)));
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  if (worst > tol) {
    std::ostringstream os;
    os << "operator is not Hermitian: entries " << entry_pair_str(wi, wj)
       << " deviate by " << worst << " (tolerance " << tol << ")";
    throw ValidationError(os.str());
  }
  return HermitianOperator{symmetrized(m)};
}

HermitianOperator hermitian_unchecked(const Matrix& m) {
  if (!m.square() || m.rows < 1)
    throw ValidationError("operator must be square with dim >= 1");
  return HermitianOperator{symmetrized(m)};
}

double EigenDecomposition::max_abs_eigenvalue() const {
  double m = 0.0;
  for (double v : eigenvalues) m = std::max(m, std::abs(v));
  return m;
}

double EigenDecomposition::zero_cutoff() const {
  return kZeroCutFactor * dim() * max_abs_eigenvalue();
}

namespace {

// One cyclic Jacobi pass over the strict upper triangle.  Rotations smaller
// than `skip` are not applied; skipping is convergent because once every
// off-diagonal entry is below skip = target/(2d) the off-diagonal Frobenius
// norm is below the target.
void jacobi_sweep(Matrix& a, Matrix& vh, double skip) {
  const int d = a.rows;
  for (int p = 0; p < d - 1; ++p) {
    for (int q = p + 1; q < d; ++q) {
      const cplx g = a(p, q);
      const double ag = std::abs(g);
      if (ag <= skip) continue;

      // Phase that makes the (p,q) entry real, then a real Jacobi rotation
      // annihilating it.  U(p,p)=c, U(p,q)=s, U(q,p)=-s*e^{-i t},
      // U(q,q)=c*e^{-i t} with e^{i t} = g/|g|.
      const cplx phase = g / ag;
      const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * ag);
      double t;
      if (tau == 0.0) {
        t = 1.0;
      } else {
        t = (tau > 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      }
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      const cplx phc = std::conj(phase);

      // Rows p and q of U^dagger A  (row-major: contiguous).
      cplx* rp = &a.a[static_cast<size_t>(p) * d];
      cplx* rq = &a.a[static_cast<size_t>(q) * d];
      for (int k = 0; k < d; ++k) {
        const cplx ap = rp[k];
        const cplx aq = rq[k];
        rp[k] = c * ap - s * phase * aq;
        rq[k] = s * ap + c * phase * aq;
      }
      // Columns p and q of (U^dagger A) U.
      for (int k = 0; k < d; ++k) {
        cplx* row = &a.a[static_cast<size_t>(k) * d];
        const cplx ap = row[p];
        const cplx aq = row[q];
        row[p] = c * ap - s * phc * aq;
        row[q] = s * ap + c * phc * aq;
      }
      // The rotation annihilates (p,q) by construction; pin it and keep the
      // diagonal exactly real so roundoff cannot accumulate asymmetry.
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = cplx(a(p, p).real(), 0.0);
      a(q, q) = cplx(a(q, q).real(), 0.0);

      // Accumulate V^dagger (row updates keep this contiguous; eigenvector k
      // is the conjugate of row k at the end).
      cplx* wp = &vh.a[static_cast<size_t>(p) * d];
      cplx* wq = &vh.a[static_cast<size_t>(q) * d];
      for (int k = 0; k < d; ++k) {
        const cplx vp = wp[k];
        const cplx vq = wq[k];
        wp[k] = c * vp - s * phase * vq;
        wq[k] = s * vp + c * phase * vq;
      }
    }
  }
}

double offdiag_frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Sweeps, descending sort, and phase canonicalization.  With `compose` set,
// the input was pre-rotated into that basis and the output eigenvectors are
// compose * U rather than U itself.
EigenDecomposition jacobi_finish(Matrix a, const Matrix* compose) {
  const int d = a.rows;
  Matrix vh = Matrix::identity(d);

  const double hnorm = frobenius_norm(a);
  const double target = kEigenOffFactor * hnorm;
  if (hnorm > 0.0) {
    const double skip = target / (2.0 * d);
    const int max_sweeps = 60;
    int sweep = 0;
    while (offdiag_frobenius(a) > target) {
      if (++sweep > max_sweeps)
        throw NumericError("eigendecomposition did not converge in " +
                           std::to_string(max_sweeps) + " sweeps");
      jacobi_sweep(a, vh, skip);
    }
  }

  // Sort descending; stable so ties keep sweep order (deterministic).
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a(x, x).real() > a(y, y).real();
  });

  // Eigenvector k = conj of row order[k] of the accumulated V^dagger.
  Matrix u(d, d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) u(i, k) = std::conj(vh(order[k], i));
  if (compose) u = multiply(*compose, u);

  EigenDecomposition e;
  e.eigenvalues.resize(d);
  e.eigenvectors = Matrix(d, d);
  for (int k = 0; k < d; ++k) {
    e.eigenvalues[k] = a(order[k], order[k]).real();
    // Canonicalize the phase so the first significant component is real > 0.
    cplx phase = 1.0;
    for (int i = 0; i < d; ++i) {
      const cplx v = u(i, k);
      if (std::abs(v) > 1e-12) {
        phase = std::conj(v) / std::abs(v);
        break;
      }
    }
    for (int i = 0; i < d; ++i) e.eigenvectors(i, k) = phase * u(i, k);
  }
  return e;
}

}  // namespace

EigenDecomposition eigendecompose(const HermitianOperator& h) {
  return jacobi_finish(h.m, nullptr);
}

EigenDecomposition eigendecompose_warm(const HermitianOperator& h,
                                       const Matrix& v0) {
  if (v0.rows != h.dim() || v0.cols != h.dim())
    throw ArgumentError("warm-started eigendecomposition: basis shape mismatch");
  // Rotate into the approximate eigenbasis; re-symmetrize because the two
  // products leave rounding residue that the sweeps assume away.
  const Matrix b = multiply(adjoint(v0), multiply(h.m, v0));
  return jacobi_finish(hermitian_unchecked(b).m, &v0);
}

HermitianOperator rebuild(const EigenDecomposition& e,
                          const std::vector<double>& diag) {
  const int d = e.dim();
  if (static_cast<int>(diag.size()) != d)
    throw ArgumentError("rebuild: diagonal length mismatch");
  Matrix r(d, d);
  // V diag V^dagger accumulated column-by-column: sum_k diag[k] v_k v_k^dagger.
  for (int k = 0; k < d; ++k) {
    const double w = diag[k];
    if (w == 0.0) continue;
    for (int i = 0; i < d; ++i) {
      const cplx vik = w * e.eigenvectors(i, k);
      for (int j = 0; j < d; ++j)
        r(i, j) += vik * std::conj(e.eigenvectors(j, k));
    }
  }
  return hermitian_unchecked(r);
}

HermitianOperator fractional_power(const EigenDecomposition& e, double t,
                                   double scale) {
  if (!std::isfinite(t)) throw ArgumentError("fractional power: exponent must be finite");
  const int d = e.dim();
  double wmax = 0.0;
  for (double w : e.eigenvalues) wmax = std::max(wmax, std::abs(w * scale));
  const double cut = kZeroCutFactor * d * wmax;
  const double psd_floor = -kPsdTolFactor * wmax;
  std::vector<double> powers(d, 0.0);
  for (int k = 0; k < d; ++k) {
    const double w = e.eigenvalues[k] * scale;
    if (w < psd_floor) {
      std::ostringstream os;
      os << "fractional power requires a PSD operator: eigenvalue " << w
         << " below tolerance " << psd_floor;
      throw NotPsdError(os.str());
    }
    if (w > cut) powers[k] = (t == 0.0) ? 1.0 : std::pow(w, t);
  }
  return rebuild(e, powers);
}

HermitianOperator fractional_power(const HermitianOperator& a, double t) {
  return fractional_power(eigendecompose(a), t);
}

namespace {

TestOperator projector_from(const EigenDecomposition& e, bool nonnegative_side) {
  const int d = e.dim();
  const double cut = kZeroCutFactor * d * e.max_abs_eigenvalue();
  std::vector<double> diag(d, 0.0);
  for (int k = 0; k < d; ++k)
    diag[k] = (e.eigenvalues[k] >= -cut) ? 1.0 : 0.0;
  HermitianOperator p = rebuild(e, diag);
  if (!nonnegative_side) p = HermitianOperator{Matrix::identity(d) - p.m};
  return TestOperator{p, 1, TestKind::projector};
}

}  // namespace

TestOperator positive_part_projector(const HermitianOperator& c) {
  return projector_from(eigendecompose(c), true);
}

TestOperator negative_part_projector(const HermitianOperator& c) {
  return projector_from(eigendecompose(c), false);
}

long long tensor_dim_checked(int dim, int n, int dim_guard,
                             const std::string& what) {
  if (n < 1) throw ArgumentError(what + ": copy count must be >= 1");
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= dim;
    if (total > dim_guard) {
      // Finish the multiplication in floating point for the error message.
      double required = static_cast<double>(total);
      for (int j = i + 1; j < n; ++j) required *= dim;
      std::ostringstream os;
      os << what << ": requires dimension " << required
         << " exceeding the guard " << dim_guard;
      throw ResourceError(os.str());
    }
  }
  return total;
}

HermitianOperator tensor_power(const HermitianOperator& a, int n,
                               int dim_guard) {
  tensor_dim_checked(a.dim(), n, dim_guard, "tensor power");
  Matrix r = a.m;
  for (int i = 1; i < n; ++i) r = kron(r, a.m);
  return HermitianOperator{r};
}

}  // namespace qht
