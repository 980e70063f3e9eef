// Exponent-engine tests: the four bounds against brute-force classical
// oracles, divergence handling for pure states, and the Legendre-type
// self-consistency of the critical parameter.

#include <doctest.h>

#include <cmath>

#include "qht/exponents.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace qht;
using testutil::diagonal_pair;
using testutil::generic_pair;
using testutil::pure_vs_mixed_pair;

TEST_CASE("stein exponent is the relative entropy") {
  const HypothesisPair pair = generic_pair();
  CHECK(stein_exponent(pair) == relative_entropy(pair));
}

TEST_CASE("chernoff bound matches the classical brute force") {
  const std::vector<double> p{0.9, 0.1}, q{0.5, 0.5};
  const BoundResult ch = chernoff_bound(diagonal_pair(p, q));
  CHECK(ch.value == doctest::Approx(oracle::chernoff_cl(p, q)).epsilon(1e-8));
  CHECK_FALSE(ch.diverged);
  CHECK(ch.s_star > 0.0);
  CHECK(ch.s_star < 1.0);
}

TEST_CASE("chernoff bound vanishes for identical states") {
  const BoundResult ch = chernoff_bound(diagonal_pair({0.4, 0.6}, {0.4, 0.6}));
  CHECK(ch.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("chernoff optimizer agrees with a dense scan of phi") {
  const HypothesisPair pair = generic_pair();
  double best = 0.0;
  for (int i = 0; i <= 100000; ++i)
    best = std::max(best, -phi(static_cast<double>(i) / 100000.0, pair));
  CHECK(chernoff_bound(pair).value == doctest::Approx(best).epsilon(1e-9));
}

TEST_CASE("hoeffding bound matches the classical brute force") {
  const std::vector<double> p{0.9, 0.1}, q{0.5, 0.5};
  const HypothesisPair pair = diagonal_pair(p, q);
  for (double r : {0.01, 0.05, 0.1, 0.2}) {
    CHECK(hoeffding_bound(r, pair).value ==
          doctest::Approx(oracle::hoeffding_cl(r, p, q)).epsilon(1e-6));
  }
}

TEST_CASE("hoeffding bound shape in r") {
  const HypothesisPair pair = generic_pair();
  const double d = stein_exponent(pair);
  double prev = oracle::kInf;
  for (double r : {0.01, 0.05, 0.1, 0.3, 0.5}) {
    const BoundResult b = hoeffding_bound(r, pair);
    CHECK(b.value >= 0.0);
    CHECK(b.value <= prev + 1e-12);
    prev = b.value;
  }
  // Beyond the relative entropy the optimal s collapses to zero and the
  // bound vanishes.
  CHECK(hoeffding_bound(d + 0.05, pair).value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK_THROWS_AS(hoeffding_bound(-0.01, pair), ArgumentError);
}

TEST_CASE("hoeffding bound diverges for a pure null state at small rates") {
  const HypothesisPair pair = pure_vs_mixed_pair();
  const double log2 = std::log(2.0);

  const BoundResult low = hoeffding_bound(0.5, pair);
  CHECK(low.diverged);
  CHECK(std::isinf(low.value));

  const BoundResult high = hoeffding_bound(log2 + 0.1, pair);
  CHECK_FALSE(high.diverged);
  CHECK(high.value == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("tilde bound never exceeds the primary bound") {
  for (const HypothesisPair& pair :
       {generic_pair(), diagonal_pair({0.9, 0.1}, {0.5, 0.5})}) {
    for (int i = 1; i <= 20; ++i) {
      const double r = 0.005 * i;
      const BoundResult h = hoeffding_bound(r, pair);
      const BoundResult t = hoeffding_bound_tilde(r, pair);
      if (h.diverged) continue;
      CHECK(h.value >= t.value - 1e-9);
    }
  }
}

TEST_CASE("tilde bound equals the primary bound for commuting pairs") {
  const HypothesisPair pair = diagonal_pair({0.9, 0.1}, {0.5, 0.5});
  for (double r : {0.02, 0.08, 0.15}) {
    CHECK(hoeffding_bound_tilde(r, pair).value ==
          doctest::Approx(hoeffding_bound(r, pair).value).epsilon(1e-8));
  }
}

TEST_CASE("critical_s satisfies the Legendre-type identities to high accuracy") {
  const HypothesisPair pair = generic_pair();
  for (double r : {0.01, 0.02, 0.05}) {
    const double sr = critical_s(r, pair);
    CHECK(sr > 0.0);
    CHECK(sr < 1.0);
    // Rate reconstruction: r = (s-1) phi'(s) - phi(s) at s = s_r.
    const double rec = (sr - 1.0) * phi_prime(sr, pair) - phi(sr, pair);
    CHECK(std::abs(rec - r) < 1e-12);
    // Value reconstruction: H(r) = s phi'(s) - phi(s) at s = s_r.
    const double val = sr * phi_prime(sr, pair) - phi(sr, pair);
    CHECK(val == doctest::Approx(hoeffding_bound(r, pair).value).epsilon(1e-10));
  }
}

TEST_CASE("legendre_residuals reports applicability") {
  const HypothesisPair pair = generic_pair();
  const double d = stein_exponent(pair);

  const LegendreResiduals in = legendre_residuals(0.02, pair);
  CHECK(in.applicable);
  CHECK(in.residual_rate < 1e-12);
  CHECK(in.residual_value < 1e-12);

  const LegendreResiduals out = legendre_residuals(d + 0.1, pair);
  CHECK_FALSE(out.applicable);
}

TEST_CASE("exponent curves agree with pointwise evaluation") {
  const HypothesisPair pair = generic_pair();
  const std::vector<double> grid{0.01, 0.05, 0.2};
  const ExponentCurve c = hoeffding_curve(grid, pair);
  REQUIRE(c.values.size() == grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    CHECK(c.values[i] == hoeffding_bound(grid[i], pair).value);
    CHECK(c.diverged[i] == hoeffding_bound(grid[i], pair).diverged);
  }
  const ExponentCurve t = hoeffding_curve_tilde(grid, pair);
  for (size_t i = 0; i < grid.size(); ++i)
    CHECK(t.values[i] == hoeffding_bound_tilde(grid[i], pair).value);
}

TEST_CASE("maximize_on_grid finds interior and edge maxima") {
  const ScalarMax inner =
      maximize_on_grid([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0);
  CHECK(inner.x == doctest::Approx(0.3).epsilon(1e-9));
  CHECK_FALSE(inner.at_upper_edge);

  const ScalarMax edge = maximize_on_grid([](double x) { return x; }, 0.0, 1.0);
  CHECK(edge.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(edge.at_upper_edge);
}
