// ============================================================================
// hermitian.hpp — Hermitian operators and their spectral calculus
// ============================================================================
//
// The operator core of the toolkit: validated Hermitian matrices, a
// deterministic complex Jacobi eigensolver, fractional powers on the support
// (pseudo-power convention), spectral sign projectors, and tensor powers with
// a memory guard.  Every downstream construction (divergences, tests, block
// operators) goes through these primitives.
//
// Conventions pinned here and relied on by tests:
//  * Hermiticity tolerance: |H(i,j) - conj(H(j,i))| <= 1e-12 * max|entry|.
//  * Eigenvalues sorted descending; eigenvectors are columns of a unitary V
//    with the first significant component of each column made real positive
//    (deterministic output for identical input).
//  * Zero classification for supports: |lambda| <= 1e-12 * dim * ||H||_2.
//  * PSD admission: smallest eigenvalue >= -1e-10 * ||H||_2.
//  * Tensor-power guard: dim^n <= 4096 by default.
// ============================================================================

#pragma once

#include <string>
#include <vector>

#include "qht/complex_matrix.hpp"
#include "qht/errors.hpp"

namespace qht {

inline constexpr double kHermTolFactor = 1e-12;       // * max |entry|
inline constexpr double kEigenOffFactor = 1e-13;      // Jacobi stop * ||H||_F
inline constexpr double kZeroCutFactor = 1e-12;       // * dim * ||H||_2
inline constexpr double kPsdTolFactor = 1e-10;        // * ||H||_2
inline constexpr int kDefaultDimGuard = 4096;

struct HermitianOperator {
  Matrix m;

  int dim() const { return m.rows; }
};

// Validates Hermiticity within tolerance and symmetrizes the stored entries
// ((M + M^dagger)/2), so downstream spectral code can assume exact Hermitian
// structure.  Throws ValidationError naming the worst entry pair.
HermitianOperator make_hermitian(const Matrix& m);

// Bypass used by constructions that are Hermitian exactly (sums of v v^dagger,
// diagonal rebuilds): symmetrizes without the tolerance check.
HermitianOperator hermitian_unchecked(const Matrix& m);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  Matrix eigenvectors;              // unitary; column k pairs with eigenvalues[k]

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  // |lambda| at or below this counts as zero for support purposes.
  double zero_cutoff() const;
  double max_abs_eigenvalue() const;
};

// Cyclic complex Jacobi with deterministic sweep order.  Converges when the
// off-diagonal Frobenius norm drops to 1e-13 * ||H||_F.
EigenDecomposition eigendecompose(const HermitianOperator& h);

// Same decomposition, warm-started from a unitary that approximately
// diagonalizes h (typically the eigenvectors of a nearby operator in a
// 1-parameter family): h is rotated into that basis first, so the sweeps
// start from a nearly diagonal matrix.  Same convergence target and output
// conventions as the cold start.
EigenDecomposition eigendecompose_warm(const HermitianOperator& h,
                                       const Matrix& v0);

// V diag(f(lambda)) V^dagger for an already-computed decomposition.
HermitianOperator rebuild(const EigenDecomposition& e,
                          const std::vector<double>& diag);

// A^t on the support of A (eigenvalues at or below the zero cutoff map to 0,
// others to lambda^t; t = 0 yields the support projector).  Negative t is the
// pseudo-inverse power.  Throws NotPsdError if A has an eigenvalue below
// -1e-10 * ||A||_2, ArgumentError for non-finite t.
HermitianOperator fractional_power(const HermitianOperator& a, double t);

// Same, starting from a cached decomposition; `scale` multiplies the
// eigenvalues before the power is taken, i.e. computes (scale * A)^t.
HermitianOperator fractional_power(const EigenDecomposition& e, double t,
                                   double scale = 1.0);

enum class TestKind { projector, randomized };

// An operator T with 0 <= T <= I on an n-fold tensor-power space.  The
// two-outcome measurement {T, I - T} accepts the null or the alternative
// hypothesis.
struct TestOperator {
  HermitianOperator op;
  int copies = 1;
  TestKind kind = TestKind::projector;

  int dim() const { return op.dim(); }
};

// Spectral projector onto the eigenspace with eigenvalue >= -cutoff (the
// boundary belongs to the nonnegative side).  The companion returns the exact
// complement I - P, so the two always sum to the identity.
TestOperator positive_part_projector(const HermitianOperator& c);
TestOperator negative_part_projector(const HermitianOperator& c);

// A^(x)n via repeated Kronecker products.  Throws ResourceError (reporting the
// required dimension) when dim^n exceeds the guard.
HermitianOperator tensor_power(const HermitianOperator& a, int n,
                               int dim_guard = kDefaultDimGuard);

// Shared guard arithmetic for callers that build tensor powers themselves.
long long tensor_dim_checked(int dim, int n, int dim_guard,
                             const std::string& what);

}  // namespace qht
