#include "grs/secular.hpp"

#include <algorithm>
#include <cmath>

#include "grs/errors.hpp"

namespace grs {

namespace {

constexpr double kPoleOffset = 1e-13;
constexpr int kMaxIterations = 200;

// Blocked summation: eight independent accumulators keep the loop
// vectorizable while bounding the per-lane error growth.
template <typename Term>
double blocked_sum(std::size_t n, Term term) {
  double acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    for (int l = 0; l < 8; ++l) acc[l] += term(i + l);
  }
  for (; i < n; ++i) acc[0] += term(i);
  // Kahan combine of the lanes.
  double s = 0.0, c = 0.0;
  for (int l = 0; l < 8; ++l) {
    const double y = acc[l] - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace

double hurwitz_zeta_tail(double s, double a) {
  if (!(s > 1.0) || !(a >= 10.0)) {
    throw validation_error("hurwitz_zeta_tail: requires s > 1 and a >= 10");
  }
  const double ams = std::pow(a, -s);
  // Euler-Maclaurin: a^{1-s}/(s-1) + a^{-s}/2 + B2 s a^{-s-1}/2 - ...
  double z = a * ams / (s - 1.0) + 0.5 * ams;
  z += s * ams / (12.0 * a);
  z -= s * (s + 1.0) * (s + 2.0) * ams / (720.0 * a * a * a);
  return z;
}

SecularProblem SecularProblem::delta_family(double delta, std::size_t terms) {
  if (!(delta > 0.0)) {
    throw validation_error("delta_family: delta must be > 0");
  }
  if (terms < 2) throw validation_error("delta_family: terms must be >= 2");
  SecularProblem p;
  p.delta_ = delta;
  p.weights_.resize(terms);
  for (std::size_t m = 0; m < terms; ++m) {
    p.weights_[m] = std::pow(static_cast<double>(m + 1), -delta);
  }
  return p;
}

SecularProblem SecularProblem::from_terms(std::vector<double> weights,
                                          std::vector<double> scales) {
  if (weights.size() != scales.size() || weights.size() < 2) {
    throw validation_error("SecularProblem: need >= 2 matching weight/scale terms");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw validation_error("SecularProblem: weights must be > 0");
  }
  if (!(scales.front() >= 1.0)) {
    throw validation_error("SecularProblem: scales must be >= 1");
  }
  for (std::size_t n = 1; n < scales.size(); ++n) {
    if (!(scales[n] > scales[n - 1])) {
      throw validation_error("SecularProblem: scales must be strictly increasing");
    }
  }
  SecularProblem p;
  p.weights_ = std::move(weights);
  p.scales_ = std::move(scales);
  p.explicit_ = true;
  return p;
}

double SecularProblem::scale(std::size_t n) const {
  return explicit_ ? scales_[n] : static_cast<double>(n + 1);
}

TailInterval SecularProblem::f_tail(double mu) const {
  TailInterval t;
  if (explicit_) {
    t.known = true;  // finite problem, no omitted terms
    return t;
  }
  const double delta = *delta_;
  const double N = static_cast<double>(terms());
  if (!(mu * (N + 1.0) >= 2.0)) return t;  // policy not valid this far left
  // sum_{m>N} m^{-delta}/(1-m mu) = -sum_{j>=0} mu^{-(j+1)} zeta(delta+1+j, N+1)
  double est = 0.0, term = 0.0;
  const double inv_mu = 1.0 / mu;
  double pw = inv_mu;
  int j = 0;
  do {
    term = pw * hurwitz_zeta_tail(delta + 1.0 + j, N + 1.0);
    est -= term;
    pw *= inv_mu;
    ++j;
  } while (term > 1e-18 * std::fabs(est) && j < 60);
  t.estimate = est;
  // Remainder of the geometric-in-1/(m mu) expansion plus E-M truncation slack.
  t.half_width = 2.0 * term + 1e-14 * std::fabs(est);
  t.known = true;
  return t;
}

TailInterval SecularProblem::c_tail(double mu) const {
  TailInterval t;
  if (explicit_) {
    t.known = true;
    return t;
  }
  const double delta = *delta_;
  const double N = static_cast<double>(terms());
  if (!(mu * (N + 1.0) >= 2.0)) return t;
  // sum_{m>N} m^{1-delta}/(1-m mu)^2 = sum_{j>=0} (j+1) mu^{-(j+2)} zeta(delta+1+j, N+1)
  double est = 0.0, term = 0.0;
  const double inv_mu = 1.0 / mu;
  double pw = inv_mu * inv_mu;
  int j = 0;
  do {
    term = (j + 1.0) * pw * hurwitz_zeta_tail(delta + 1.0 + j, N + 1.0);
    est += term;
    pw *= inv_mu;
    ++j;
  } while (term > 1e-18 * est && j < 60);
  t.estimate = est;
  t.half_width = 2.0 * term + 1e-14 * est;
  t.known = true;
  return t;
}

static void check_pole_proximity(const SecularProblem& p, double mu) {
  // Scales are strictly increasing, so only the two poles adjacent to mu can
  // be close; a full scan stays cheap relative to the evaluation itself for
  // explicit problems and is O(1) for the delta family.
  if (p.delta()) {
    const double m_near = std::round(1.0 / mu);
    if (m_near >= 1.0 && m_near <= static_cast<double>(p.terms())) {
      if (std::fabs(mu - 1.0 / m_near) < kPoleOffset) {
        throw numerical_error("evaluate_F: mu within 1e-13 of pole");
      }
    }
    return;
  }
  for (std::size_t n = 0; n < p.terms(); ++n) {
    if (std::fabs(mu - 1.0 / p.scale(n)) < kPoleOffset) {
      throw numerical_error("evaluate_F: mu within 1e-13 of pole");
    }
  }
}

FValue evaluate_F(const SecularProblem& p, double mu) {
  if (!(mu > 0.0)) throw validation_error("evaluate_F: mu must be in (0, 1/s_0)");
  check_pole_proximity(p, mu);
  double partial;
  if (p.delta()) {
    const double* w = p.weights().data();
    partial = blocked_sum(p.terms(), [w, mu](std::size_t m) {
      return w[m] / (1.0 - mu * static_cast<double>(m + 1));
    });
  } else {
    partial = blocked_sum(p.terms(), [&p, mu](std::size_t n) {
      return p.weight(n) / (1.0 - mu * p.scale(n));
    });
  }
  FValue out;
  const TailInterval tail = p.f_tail(mu);
  out.value = partial + tail.estimate;
  out.tail_lo = -tail.half_width;
  out.tail_hi = tail.half_width;
  out.tail_known = tail.known;
  return out;
}

FDValue evaluate_F_dF(const SecularProblem& p, double mu) {
  check_pole_proximity(p, mu);
  double f, df;
  if (p.delta()) {
    const double* w = p.weights().data();
    f = blocked_sum(p.terms(), [w, mu](std::size_t m) {
      return w[m] / (1.0 - mu * static_cast<double>(m + 1));
    });
    df = blocked_sum(p.terms(), [w, mu](std::size_t m) {
      const double s = static_cast<double>(m + 1);
      const double d = 1.0 - mu * s;
      return w[m] * s / (d * d);
    });
  } else {
    f = blocked_sum(p.terms(), [&p, mu](std::size_t n) {
      return p.weight(n) / (1.0 - mu * p.scale(n));
    });
    df = blocked_sum(p.terms(), [&p, mu](std::size_t n) {
      const double d = 1.0 - mu * p.scale(n);
      return p.weight(n) * p.scale(n) / (d * d);
    });
  }
  const TailInterval tail = p.f_tail(mu);
  return {f + tail.estimate, df};
}

std::vector<Bracket> brackets(const SecularProblem& p, std::size_t count) {
  if (count + 1 > p.terms()) {
    throw validation_error("brackets: count must be <= terms - 1");
  }
  std::vector<Bracket> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double hi = 1.0 / p.scale(j);
    const double lo = 1.0 / p.scale(j + 1);
    const double eps = 1e-12 * (hi - lo);
    out.push_back({lo + eps, hi - eps});
  }
  return out;
}

RootSet solve_roots(const SecularProblem& p, std::size_t count, double tol) {
  if (!(tol >= 1e-14)) throw validation_error("solve_roots: tol must be >= 1e-14");
  const std::vector<Bracket> brs = brackets(p, count);
  RootSet rs;
  rs.roots.reserve(count);
  for (const Bracket& br : brs) {
    double lo = br.lo, hi = br.hi;
    // F(lo) < 0 < F(hi): the bracket sits between adjacent poles where F
    // increases from -inf to +inf.
    double x = 0.5 * (lo + hi);
    int iters = 0;
    while (hi - lo > tol) {
      if (++iters > kMaxIterations) {
        throw numerical_error("solve_roots: no convergence in 200 iterations");
      }
      const FDValue fd = evaluate_F_dF(p, x);
      if (fd.f < 0.0) lo = x; else hi = x;
      double next = x - fd.f / fd.df;  // safeguarded Newton
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::fabs(next - x) < 0.25 * tol) next = 0.5 * (lo + hi);
      x = next;
    }
    const double mu = 0.5 * (lo + hi);
    const FValue fv = evaluate_F(p, mu);
    RootRecord rec;
    rec.mu = mu;
    rec.bracket_lo = br.lo;
    rec.bracket_hi = br.hi;
    rec.residual = std::fabs(fv.value);
    rec.tail_bound = fv.tail_hi;
    rec.iterations = iters;
    rs.roots.push_back(rec);
  }
  return rs;
}

Normalization normalization_c(const SecularProblem& p, double mu) {
  check_pole_proximity(p, mu);
  double sum;
  if (p.delta()) {
    const double* w = p.weights().data();
    sum = blocked_sum(p.terms(), [w, mu](std::size_t m) {
      const double s = static_cast<double>(m + 1);
      const double d = 1.0 - mu * s;
      return w[m] * s / (d * d);
    });
  } else {
    sum = blocked_sum(p.terms(), [&p, mu](std::size_t n) {
      const double d = 1.0 - mu * p.scale(n);
      return p.weight(n) * p.scale(n) / (d * d);
    });
  }
  const TailInterval tail = p.c_tail(mu);
  const double total = sum + tail.estimate;
  Normalization out;
  out.c = 1.0 / std::sqrt(total);
  // d(c)/d(sum) = -c / (2 sum)
  out.uncertainty = 0.5 * out.c * tail.half_width / total;
  return out;
}

}  // namespace grs
