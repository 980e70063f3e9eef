// ============================================================================
// oracles.hpp — independent reference implementations for the unit tests
// ============================================================================
//
// Everything in this header is deliberately written WITHOUT the library's
// spectral code: classical (diagonal) formulas work on probability vectors
// with plain loops, and the one matrix case (2x2 Hermitian) uses the
// closed-form eigensystem.  Agreement between the library and these oracles
// is therefore meaningful evidence, not a tautology.
//
// Conventions match the library: natural logarithms, 0 log 0 = 0, powers of
// zero eigenvalues are zero (support convention).
// ============================================================================

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Classical divergences on probability vectors
// ---------------------------------------------------------------------------

// sum_i p_i log(p_i / q_i); +infinity when p puts mass where q has none.
inline double kl(const std::vector<double>& p, const std::vector<double>& q) {
  double d = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d;
}

// log sum_i p_i^{1-s} q_i^s with zero entries contributing nothing.
inline double phi_cl(double s, const std::vector<double>& p,
                     const std::vector<double>& q) {
  double t = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0 || q[i] <= 0.0) continue;
    t += std::pow(p[i], 1.0 - s) * std::pow(q[i], s);
  }
  return std::log(t);
}

// d/ds of phi_cl, written out directly.
inline double phi_prime_cl(double s, const std::vector<double>& p,
                           const std::vector<double>& q) {
  double f = 0.0, g = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0 || q[i] <= 0.0) continue;
    const double w = std::pow(p[i], 1.0 - s) * std::pow(q[i], s);
    f += w;
    g += w * std::log(q[i] / p[i]);
  }
  return g / f;
}

// Brute-force maximum of -phi over a dense s grid on [0,1].
inline double chernoff_cl(const std::vector<double>& p,
                          const std::vector<double>& q, int grid = 100001) {
  double best = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double s = static_cast<double>(i) / (grid - 1);
    best = std::max(best, -phi_cl(s, p, q));
  }
  return best;
}

// Brute-force sup of (-s r - phi(s)) / (1 - s) over a dense grid on
// [0, 1 - 1e-6]; clamped at zero like the library's bound.
inline double hoeffding_cl(double r, const std::vector<double>& p,
                           const std::vector<double>& q, int grid = 100001) {
  double best = 0.0;
  const double cap = 1.0 - 1e-6;
  for (int i = 0; i < grid; ++i) {
    const double s = cap * static_cast<double>(i) / (grid - 1);
    best = std::max(best, (-s * r - phi_cl(s, p, q)) / (1.0 - s));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Product distributions and the classical Neyman-Pearson optimum
// ---------------------------------------------------------------------------

// All d^n products p_{y_1} ... p_{y_n} in lexicographic outcome order.
inline std::vector<double> product_dist(const std::vector<double>& p, int n) {
  std::vector<double> out{1.0};
  for (int c = 0; c < n; ++c) {
    std::vector<double> next;
    next.reserve(out.size() * p.size());
    for (double v : out)
      for (double w : p) next.push_back(v * w);
    out = std::move(next);
  }
  return out;
}

// Exact min of sum_i t_i q_i over randomized tests 0 <= t <= 1 with
// sum_i t_i p_i >= 1 - eps: fractional knapsack in likelihood-ratio order.
inline double np_beta_star_cl(int n, double eps, const std::vector<double>& p,
                              const std::vector<double>& q) {
  const std::vector<double> pn = product_dist(p, n);
  const std::vector<double> qn = product_dist(q, n);
  std::vector<size_t> idx;
  for (size_t i = 0; i < pn.size(); ++i)
    if (pn[i] > 0.0) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return qn[a] * pn[b] < qn[b] * pn[a];  // ratio q/p ascending, exact in *
  });
  const double need = 1.0 - eps;
  double got = 0.0, beta = 0.0;
  for (size_t i : idx) {
    if (got + pn[i] <= need) {
      got += pn[i];
      beta += qn[i];
    } else {
      const double t = (need - got) / pn[i];
      beta += t * qn[i];
      got = need;
      break;
    }
  }
  return beta;
}

// ---------------------------------------------------------------------------
// The explicit diagonal test: indicator of (q_y e^{-n a})^pow < (p_y)^pow
// ---------------------------------------------------------------------------

struct TestErrorsCl {
  double alpha = 0.0;
  double beta = 0.0;
};

// Mirrors the projector construction for commuting (diagonal) pairs,
// including the relative zero cutoff the spectral code applies.
inline TestErrorsCl diagonal_test_errors(int n, double a, double s,
                                         const std::vector<double>& p,
                                         const std::vector<double>& q) {
  const double pow_exp = (s <= 0.5) ? 1.0 - s : s;
  const std::vector<double> pn = product_dist(p, n);
  const std::vector<double> qn = product_dist(q, n);
  const double ena = std::exp(-n * a);
  std::vector<double> delta(pn.size());
  double dmax = 0.0;
  for (size_t y = 0; y < pn.size(); ++y) {
    delta[y] = std::pow(qn[y] * ena, pow_exp) - std::pow(pn[y], pow_exp);
    dmax = std::max(dmax, std::fabs(delta[y]));
  }
  const double cut = 1e-12 * static_cast<double>(pn.size()) * dmax;
  TestErrorsCl e;
  for (size_t y = 0; y < pn.size(); ++y) {
    if (delta[y] < -cut)
      e.beta += qn[y];  // accepted by the test
    else
      e.alpha += pn[y];  // rejected
  }
  return e;
}

// ---------------------------------------------------------------------------
// Classical channel coding: rows of conditional probabilities
// ---------------------------------------------------------------------------

// log sum_x prior_x sum_y P_x(y)^{1-s} qbar(y)^s with qbar the prior average.
inline double channel_phi_cl(double s,
                             const std::vector<std::vector<double>>& rows,
                             const std::vector<double>& prior) {
  std::vector<double> qbar(rows[0].size(), 0.0);
  for (size_t x = 0; x < rows.size(); ++x)
    for (size_t y = 0; y < qbar.size(); ++y) qbar[y] += prior[x] * rows[x][y];
  double t = 0.0;
  for (size_t x = 0; x < rows.size(); ++x) {
    if (prior[x] <= 0.0) continue;
    double inner = 0.0;
    for (size_t y = 0; y < qbar.size(); ++y) {
      if (rows[x][y] <= 0.0 || qbar[y] <= 0.0) continue;
      inner += std::pow(rows[x][y], 1.0 - s) * std::pow(qbar[y], s);
    }
    t += prior[x] * inner;
  }
  return std::log(t);
}

// Brute-force max of (-s a - channel_phi_cl(s)) over a dense grid on [0,1].
inline double channel_exponent_cl(double a,
                                  const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& prior,
                                  int grid = 100001) {
  double best = -kInf;
  for (int i = 0; i < grid; ++i) {
    const double s = static_cast<double>(i) / (grid - 1);
    best = std::max(best, -s * a - channel_phi_cl(s, rows, prior));
  }
  return best;
}

// Average divergence of the letters from the prior-averaged output.
inline double channel_divergence_cl(const std::vector<std::vector<double>>& rows,
                                    const std::vector<double>& prior) {
  std::vector<double> qbar(rows[0].size(), 0.0);
  for (size_t x = 0; x < rows.size(); ++x)
    for (size_t y = 0; y < qbar.size(); ++y) qbar[y] += prior[x] * rows[x][y];
  double h = 0.0;
  for (size_t x = 0; x < rows.size(); ++x)
    if (prior[x] > 0.0) h += prior[x] * kl(rows[x], qbar);
  return h;
}

// ---------------------------------------------------------------------------
// Closed-form 2x2 Hermitian eigensystem
// ---------------------------------------------------------------------------

struct Eig2 {
  double lam[2];                 // descending
  std::complex<double> vec[2][2];  // vec[k] = normalized eigenvector of lam[k]
};

// H = [[a, b], [conj(b), c]] via the standard half-trace / radius formulas.
inline Eig2 eig2(double a, double c, std::complex<double> b) {
  Eig2 e;
  const double m = 0.5 * (a + c);
  const double drad = std::hypot(0.5 * (a - c), std::abs(b));
  e.lam[0] = m + drad;
  e.lam[1] = m - drad;
  if (std::abs(b) < 1e-300) {
    const int top = (a >= c) ? 0 : 1;
    e.vec[0][0] = (top == 0) ? 1.0 : 0.0;
    e.vec[0][1] = (top == 0) ? 0.0 : 1.0;
    e.vec[1][0] = (top == 0) ? 0.0 : 1.0;
    e.vec[1][1] = (top == 0) ? 1.0 : 0.0;
    return e;
  }
  for (int k = 0; k < 2; ++k) {
    // (H - lam) v = 0 with v = (b, lam - a): first row gives
    // a b + b (lam - a) = b lam; second row follows from the characteristic
    // polynomial.
    std::complex<double> v0 = b;
    std::complex<double> v1 = e.lam[k] - a;
    const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
    e.vec[k][0] = v0 / nrm;
    e.vec[k][1] = v1 / nrm;
  }
  return e;
}

// log Tr[rho^{1-s} sigma^s] for 2x2 Hermitian pairs from the closed forms:
// sum_{ij} lam_i^{1-s} mu_j^s |<u_i|w_j>|^2, zero eigenvalues skipped.
inline double phi_2x2(double s, double ra, double rc, std::complex<double> rb,
                      double sa, double sc, std::complex<double> sb) {
  const Eig2 er = eig2(ra, rc, rb);
  const Eig2 es = eig2(sa, sc, sb);
  double t = 0.0;
  for (int i = 0; i < 2; ++i) {
    if (er.lam[i] <= 1e-14) continue;
    for (int j = 0; j < 2; ++j) {
      if (es.lam[j] <= 1e-14) continue;
      const std::complex<double> ov = std::conj(er.vec[i][0]) * es.vec[j][0] +
                                      std::conj(er.vec[i][1]) * es.vec[j][1];
      t += std::pow(er.lam[i], 1.0 - s) * std::pow(es.lam[j], s) * std::norm(ov);
    }
  }
  return std::log(t);
}

// Tr[rho (log rho - log sigma)] for 2x2 pairs from the closed forms.
inline double relative_entropy_2x2(double ra, double rc, std::complex<double> rb,
                                   double sa, double sc,
                                   std::complex<double> sb) {
  const Eig2 er = eig2(ra, rc, rb);
  const Eig2 es = eig2(sa, sc, sb);
  double d = 0.0;
  for (int i = 0; i < 2; ++i) {
    if (er.lam[i] <= 1e-14) continue;
    d += er.lam[i] * std::log(er.lam[i]);
    for (int j = 0; j < 2; ++j) {
      const std::complex<double> ov = std::conj(er.vec[i][0]) * es.vec[j][0] +
                                      std::conj(er.vec[i][1]) * es.vec[j][1];
      const double w = er.lam[i] * std::norm(ov);
      if (w <= 0.0) continue;
      if (es.lam[j] <= 1e-14) return kInf;
      d -= w * std::log(es.lam[j]);
    }
  }
  return d;
}

}  // namespace oracle
