// State-layer tests: density validation, pair construction with support
// analysis, and the divergence family against classical and 2x2 closed-form
// oracles.

#include <doctest.h>

#include <cmath>

#include "qht/state_space.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace qht;
using testutil::diagonal_pair;
using testutil::generic_pair;
using testutil::mat2;

TEST_CASE("make_density validates trace and positivity") {
  CHECK_THROWS_AS(make_density(hermitian_unchecked(testutil::diag({0.9, 0.3}))),
                  ValidationError);
  CHECK_THROWS_AS(make_density(hermitian_unchecked(testutil::diag({1.5, -0.5}))),
                  NotPsdError);
  const DensityMatrix d = diagonal_density({0.25, 0.75});
  CHECK(d.dim() == 2);
}

TEST_CASE("make_pair rejects dimension mismatch") {
  CHECK_THROWS_AS(make_pair(diagonal_density({0.5, 0.5}),
                            diagonal_density({0.2, 0.3, 0.5})),
                  ArgumentError);
}

TEST_CASE("support containment flag") {
  CHECK(generic_pair().support_ok);
  CHECK(diagonal_pair({1.0, 0.0}, {0.5, 0.5}).support_ok);
  CHECK_FALSE(diagonal_pair({1.0, 0.0}, {0.0, 1.0}).support_ok);
  CHECK_FALSE(diagonal_pair({0.5, 0.5}, {1.0, 0.0}).support_ok);
}

TEST_CASE("relative entropy matches the classical formula on diagonal pairs") {
  const std::vector<double> p{0.9, 0.1}, q{0.5, 0.5};
  CHECK(relative_entropy(diagonal_pair(p, q)) ==
        doctest::Approx(oracle::kl(p, q)).epsilon(1e-12));

  const std::vector<double> p3{0.6, 0.3, 0.1}, q3{0.2, 0.3, 0.5};
  CHECK(relative_entropy(diagonal_pair(p3, q3)) ==
        doctest::Approx(oracle::kl(p3, q3)).epsilon(1e-12));
}

TEST_CASE("relative entropy matches the 2x2 closed form off the diagonal") {
  const double lib = relative_entropy(generic_pair());
  const double ref = oracle::relative_entropy_2x2(
      0.85, 0.15, cplx(0.10, 0.0), 0.30, 0.70, cplx(0.0, -0.15));
  CHECK(lib == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("relative entropy edge cases") {
  CHECK(std::isinf(relative_entropy(diagonal_pair({0.5, 0.5}, {1.0, 0.0}))));
  CHECK(relative_entropy(diagonal_pair({0.4, 0.6}, {0.4, 0.6})) == 0.0);
}

TEST_CASE("phi matches the classical formula on diagonal pairs") {
  const std::vector<double> p{0.9, 0.1}, q{0.5, 0.5};
  const HypothesisPair pair = diagonal_pair(p, q);
  for (int i = 0; i <= 10; ++i) {
    const double s = 0.1 * i;
    CHECK(phi(s, pair) == doctest::Approx(oracle::phi_cl(s, p, q)).epsilon(1e-12));
  }
}

TEST_CASE("phi matches the 2x2 closed form off the diagonal") {
  const HypothesisPair pair = generic_pair();
  for (int i = 0; i <= 10; ++i) {
    const double s = 0.1 * i;
    const double ref = oracle::phi_2x2(s, 0.85, 0.15, cplx(0.10, 0.0), 0.30,
                                       0.70, cplx(0.0, -0.15));
    CHECK(phi(s, pair) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("phi endpoint values and convexity") {
  const HypothesisPair pair = generic_pair();
  CHECK(std::abs(phi(0.0, pair)) < 1e-12);
  CHECK(std::abs(phi(1.0, pair)) < 1e-12);
  // Midpoint convexity across a uniform grid.
  const int n = 41;
  std::vector<double> vals;
  for (int i = 0; i < n; ++i) vals.push_back(phi(static_cast<double>(i) / (n - 1), pair));
  for (int i = 1; i + 1 < n; ++i)
    CHECK(vals[i - 1] + vals[i + 1] - 2.0 * vals[i] >= -1e-10);
  // phi < 0 strictly inside (distinct states).
  CHECK(phi(0.5, pair) < -1e-3);
}

TEST_CASE("phi rejects out-of-range s and orthogonal supports") {
  const HypothesisPair pair = generic_pair();
  CHECK_THROWS_AS(phi(-0.1, pair), ArgumentError);
  CHECK_THROWS_AS(phi(1.1, pair), ArgumentError);
  const HypothesisPair disjoint = diagonal_pair({1.0, 0.0}, {0.0, 1.0});
  CHECK_THROWS_AS(phi(0.5, disjoint), DegenerateSupportError);
}

TEST_CASE("phi_prime matches the classical derivative and finite differences") {
  const std::vector<double> p{0.8, 0.15, 0.05}, q{0.3, 0.3, 0.4};
  const HypothesisPair dpair = diagonal_pair(p, q);
  for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    CHECK(phi_prime(s, dpair) ==
          doctest::Approx(oracle::phi_prime_cl(s, p, q)).epsilon(1e-10));
  }

  const HypothesisPair pair = generic_pair();
  const double h = 1e-6;
  for (double s : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double fd = (phi(s + h, pair) - phi(s - h, pair)) / (2.0 * h);
    CHECK(phi_prime(s, pair) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("phi_prime at zero is minus the relative entropy") {
  const HypothesisPair pair = generic_pair();
  CHECK(phi_prime(0.0, pair) ==
        doctest::Approx(-relative_entropy(pair)).epsilon(1e-12));
}

TEST_CASE("phi_tilde equals phi for commuting pairs") {
  const HypothesisPair pair = diagonal_pair({0.9, 0.1}, {0.5, 0.5});
  for (double s : {0.0, 0.2, 0.5, 0.8, 1.0})
    CHECK(phi_tilde(s, pair) == doctest::Approx(phi(s, pair)).epsilon(1e-11));
}

TEST_CASE("phi_tilde dominates phi on the test pairs") {
  for (const HypothesisPair& pair :
       {generic_pair(), diagonal_pair({0.9, 0.1}, {0.5, 0.5})}) {
    for (int i = 0; i <= 10; ++i) {
      const double s = 0.1 * i;
      CHECK(phi_tilde(s, pair) >= phi(s, pair) - 1e-9);
    }
  }
}

TEST_CASE("phi_tilde vanishes at s = 0") {
  CHECK(std::abs(phi_tilde(0.0, generic_pair())) < 1e-12);
}
