#include "qht/cq_channel.hpp"

#include <cmath>
#include <sstream>

namespace qht {

CQChannel make_channel(std::vector<DensityMatrix> letters) {
  if (letters.empty())
    throw ValidationError("channel must have at least one letter");
  const int d = letters[0].dim();
  for (size_t i = 1; i < letters.size(); ++i) {
    if (letters[i].dim() != d) {
      std::ostringstream os;
      os << "channel letters must share one dimension: letter " << i
         << " has dim " << letters[i].dim() << ", expected " << d;
      throw ValidationError(os.str());
    }
  }
  return CQChannel{std::move(letters)};
}

InputDistribution make_distribution(std::vector<double> p) {
  double sum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) {
      std::ostringstream os;
      os << "input distribution: negative probability at index " << i;
      throw ValidationError(os.str());
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    std::ostringstream os;
    os << "input distribution must sum to 1: got " << sum;
    throw ValidationError(os.str());
  }
  return InputDistribution{std::move(p)};
}

InputDistribution uniform_distribution(int k) {
  return InputDistribution{std::vector<double>(k, 1.0 / k)};
}

namespace {

void check_arity(const CQChannel& ch, const InputDistribution& p) {
  if (static_cast<int>(p.p.size()) != ch.alphabet()) {
    std::ostringstream os;
    os << "input distribution has " << p.p.size() << " entries for "
       << ch.alphabet() << " letters";
    throw ArgumentError(os.str());
  }
}

}  // namespace

DensityMatrix sigma_p(const CQChannel& ch, const InputDistribution& p) {
  check_arity(ch, p);
  const int d = ch.dim();
  Matrix avg(d, d);
  for (int x = 0; x < ch.alphabet(); ++x)
    avg = avg + cplx(p.p[x], 0.0) * ch.letters[x].op.m;
  return make_density(hermitian_unchecked(avg));
}

BlockOperators block_operators(const CQChannel& ch,
                               const InputDistribution& p) {
  check_arity(ch, p);
  const int k = ch.alphabet();
  const int d = ch.dim();
  const DensityMatrix avg = sigma_p(ch, p);
  Matrix r(k * d, k * d), s(k * d, k * d);
  for (int x = 0; x < k; ++x)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        r(x * d + i, x * d + j) = p.p[x] * ch.letters[x].op.m(i, j);
        s(x * d + i, x * d + j) = p.p[x] * avg.op.m(i, j);
      }
  return BlockOperators{make_density(hermitian_unchecked(r)),
                        make_density(hermitian_unchecked(s))};
}

ChannelContext make_channel_context(const CQChannel& ch,
                                    const InputDistribution& p) {
  check_arity(ch, p);
  ChannelContext ctx;
  ctx.channel = ch;
  ctx.p = p;
  ctx.avg = sigma_p(ch, p);
  for (int x = 0; x < ch.alphabet(); ++x)
    ctx.letter_pairs.push_back(make_pair(ch.letters[x], ctx.avg));
  return ctx;
}

namespace {

// Tr[rho_x^{1-s} sigma_p^s] from the cached pair spectra.
double letter_pairing(double s, const HypothesisPair& pair) {
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

}  // namespace

double phi_p(double s, const ChannelContext& ctx) {
  if (!(s >= -1e-12 && s <= 1.0 + 1e-12))
    throw ArgumentError("phi_p: s must lie in [0,1]");
  double f = 0.0;
  for (int x = 0; x < ctx.channel.alphabet(); ++x) {
    if (ctx.p.p[x] == 0.0) continue;
    f += ctx.p.p[x] * letter_pairing(s, ctx.letter_pairs[x]);
  }
  if (!(f > 0.0))
    throw DegenerateSupportError("phi_p: trace underflowed to <= 0");
  return std::log(f);
}

double phi_p(double s, const CQChannel& ch, const InputDistribution& p) {
  return phi_p(s, make_channel_context(ch, p));
}

BoundResult channel_exponent(double a, const ChannelContext& ctx) {
  if (!(a >= 0.0)) {
    std::ostringstream os;
    os << "channel exponent: rate must be >= 0, got " << a;
    throw ArgumentError(os.str());
  }
  auto objective = [&](double s) { return -s * a - phi_p(s, ctx); };
  const ScalarMax m = maximize_on_grid(objective, 0.0, 1.0);
  BoundResult b;
  b.value = std::max(m.value, 0.0);
  b.s_star = m.x;
  return b;
}

BoundResult channel_exponent(double a, const CQChannel& ch,
                             const InputDistribution& p) {
  return channel_exponent(a, make_channel_context(ch, p));
}

double holevo_quantity(const ChannelContext& ctx) {
  double h = 0.0;
  for (int x = 0; x < ctx.channel.alphabet(); ++x) {
    if (ctx.p.p[x] == 0.0) continue;
    h += ctx.p.p[x] * relative_entropy(ctx.letter_pairs[x]);
  }
  return h;
}

double holevo_quantity(const CQChannel& ch, const InputDistribution& p) {
  return holevo_quantity(make_channel_context(ch, p));
}

InputOptimum optimize_input(double a, const CQChannel& ch) {
  const int k = ch.alphabet();
  if (k > kAlphabetGuard) {
    std::ostringstream os;
    os << "input optimization supports alphabets up to " << kAlphabetGuard
       << ", got " << k;
    throw ResourceError(os.str());
  }
  auto objective = [&](const std::vector<double>& p) {
    return channel_exponent(a, make_channel_context(ch, InputDistribution{p}))
        .value;
  };

  // Deterministic start set: uniform, every vertex, every pair midpoint.
  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(k, 1.0 / k));
  for (int i = 0; i < k; ++i) {
    std::vector<double> v(k, 0.0);
    v[i] = 1.0;
    starts.push_back(v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<double> v(k, 0.0);
      v[i] = v[j] = 0.5;
      starts.push_back(v);
    }

  InputOptimum best;
  best.exponent = -1.0;
  for (const auto& start : starts) {
    std::vector<double> p = start;
    double val = objective(p);
    // Projected coordinate ascent: move mass delta from one letter to
    // another while it helps, then halve the step.
    for (double delta = 1.0 / 50.0; delta >= 1e-4; delta *= 0.5) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            if (i == j || p[j] < delta - 1e-15) continue;
            std::vector<double> q = p;
            q[i] += delta;
            q[j] -= delta;
            if (q[j] < 0.0) q[j] = 0.0;
            const double qv = objective(q);
            if (qv > val + 1e-13) {
              p = q;
              val = qv;
              improved = true;
            }
          }
      }
    }
    if (val > best.exponent) {
      best.exponent = val;
      best.p_star = p;
    }
  }
  return best;
}

BlockCheck finite_blocklength_check(int n, double a, double s,
                                    const CQChannel& ch,
                                    const InputDistribution& p,
                                    int dim_guard) {
  if (!(a >= 0.0))
    throw ArgumentError("blocklength check: rate must be >= 0");
  const BlockOperators blocks = block_operators(ch, p);
  tensor_dim_checked(blocks.r.dim(), n, dim_guard, "blocklength check");
  const HypothesisPair block_pair = make_pair(blocks.r, blocks.s_p);

  // The testing bound applies with the second operand scaled by e^{na}, i.e.
  // the block test at threshold -a.
  const TestOperator t = build_test(n, -a, s, block_pair, dim_guard);
  const ErrorPair e = error_pair(t, n, block_pair);

  const ChannelContext ctx = make_channel_context(ch, p);
  const double f = phi_p(s, ctx);

  BlockCheck out;
  out.per_term_bound = std::exp(n * (s * a + f));
  out.term_alpha = 2.0 * e.alpha;
  out.term_beta = 4.0 * std::exp(n * a) * e.beta;
  out.slack_alpha = 2.0 * out.per_term_bound - out.term_alpha;
  out.slack_beta = 4.0 * out.per_term_bound - out.term_beta;
  out.achieved_exponent =
      -std::log(std::max(out.term_alpha + out.term_beta, 1e-300)) / n;
  out.reference_exponent = channel_exponent(a, ctx).value;
  return out;
}

}  // namespace qht
