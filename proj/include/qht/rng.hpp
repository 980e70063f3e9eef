// ============================================================================
// rng.hpp — deterministic random instance generation
// ============================================================================
//
// The property suites pin a seed and must reproduce bit-identical instances
// on every platform.  std::mt19937_64's bit stream is specified by the
// standard, but the std distributions are not — so the uniform and normal
// mappings are written out here and never touched again.
// ============================================================================

#pragma once

#include <cstdint>
#include <random>

#include "qht/complex_matrix.hpp"
#include "qht/hermitian.hpp"

namespace qht {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// G G^dagger with G a dim x rank matrix of complex standard normals: PSD by
// construction, rank-deficient when rank < dim.
inline HermitianOperator random_psd(Rng& rng, int dim, int rank) {
  Matrix g(dim, rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  return hermitian_unchecked(multiply(g, adjoint(g)));
}

inline HermitianOperator random_hermitian(Rng& rng, int dim) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return hermitian_unchecked(0.5 * (g + adjoint(g)));
}

// Random density matrix: normalized random PSD.
inline HermitianOperator random_density(Rng& rng, int dim, int rank) {
  HermitianOperator p = random_psd(rng, dim, rank);
  const double tr = trace(p.m).real();
  return hermitian_unchecked((1.0 / tr) * p.m);
}

}  // namespace qht
