#include "grs/krein.hpp"

#include <cmath>
#include <vector>

#include "grs/errors.hpp"

namespace grs {

namespace {

// sum_{m > a} m^{-q} / (1 - m mu)^2 via the pole expansion in 1/(m mu),
// valid once mu (a+1) >= 2. Summands are positive.
double inv_sq_tail(double q, double mu, double a) {
  if (!(mu * (a + 1.0) >= 2.0)) {
    throw numerical_error("inv_sq_tail: truncation too small for tail policy");
  }
  double est = 0.0, term = 0.0;
  const double inv_mu = 1.0 / mu;
  double pw = inv_mu * inv_mu;
  int j = 0;
  do {
    term = (j + 1.0) * pw * hurwitz_zeta_tail(q + j + 2.0, a + 1.0);
    est += term;
    pw *= inv_mu;
    ++j;
  } while (term > 1e-18 * est && j < 60);
  return est + 2.0 * term;
}

}  // namespace

KreinFamilySpec KreinFamilySpec::delta_family(double delta, std::size_t pairs,
                                              std::size_t terms,
                                              double root_tol) {
  if (!(delta > 0.0)) {
    throw validation_error("KreinFamilySpec: delta must be > 0");
  }
  if (pairs < 1) throw validation_error("KreinFamilySpec: pairs must be >= 1");
  KreinFamilySpec s;
  s.delta_ = delta;
  s.alpha_ = AlphaSequence::special_family();
  s.chi_ = [delta](std::size_t n) {
    return std::pow(static_cast<double>(n + 1), -(delta + 1.0) / 2.0);
  };
  // |chi_n cosh a_n|^2 = (n+1)^{-delta}; |chi_n cosh^2 a_n|^2 = (n+1)^{1-delta}
  s.e_cosh_ = -delta;
  s.e_cosh2_ = 1.0 - delta;
  s.pairs_ = pairs;
  s.terms_ = terms;
  s.root_tol_ = root_tol;
  return s;
}

KreinFamilySpec KreinFamilySpec::general(
    AlphaSequence alpha, std::function<double(std::size_t)> chi,
    double chi_cosh_sq_exponent, double chi_cosh2_sq_exponent,
    std::size_t pairs, std::size_t terms, double root_tol) {
  if (pairs < 1) throw validation_error("KreinFamilySpec: pairs must be >= 1");
  for (std::size_t n = 0; n < std::min<std::size_t>(pairs, 64); ++n) {
    if (chi(n) == 0.0) {
      throw validation_error("KreinFamilySpec: chi_n must be nonzero");
    }
  }
  KreinFamilySpec s;
  s.alpha_ = std::move(alpha);
  s.chi_ = std::move(chi);
  s.e_cosh_ = chi_cosh_sq_exponent;
  s.e_cosh2_ = chi_cosh2_sq_exponent;
  s.pairs_ = pairs;
  s.terms_ = terms;
  s.root_tol_ = root_tol;
  return s;
}

double KreinFamilySpec::chi(std::size_t n) const { return chi_(n); }

SecularProblem KreinFamilySpec::secular_problem() const {
  if (delta_) return SecularProblem::delta_family(*delta_, terms_);
  std::vector<double> w(terms_), s(terms_);
  for (std::size_t n = 0; n < terms_; ++n) {
    const PairHyperbolics h = alpha_.hyper(n);
    const double x = chi_(n) * h.ch;
    w[n] = x * x;
    s[n] = h.ch * h.ch;
  }
  return SecularProblem::from_terms(std::move(w), std::move(s));
}

RootSet solve_family_roots(const KreinFamilySpec& spec, std::size_t count) {
  return solve_roots(spec.secular_problem(), count, spec.root_tol());
}

static const RootRecord& root_for(const KreinFamilySpec& spec, std::size_t k,
                                  const RootSet& roots) {
  if (k >= roots.roots.size()) {
    throw validation_error("krein family: missing root for requested index");
  }
  (void)spec;
  return roots.roots[k];
}

// Shared builder for the odd-index series of phi (with hyperbolic factors)
// and e (plain e_{2n+1} coefficients).
static TruncatedVector odd_series(const KreinFamilySpec& spec, std::size_t k,
                                  const RootSet& roots, bool with_hyper) {
  const RootRecord& root = root_for(spec, k, roots);
  const double mu = root.mu;
  const SecularProblem prob = spec.secular_problem();
  const Normalization nc = normalization_c(prob, mu);
  const double scale = nc.c / std::sqrt(mu);

  const std::size_t pairs = spec.pairs();
  std::vector<cdouble> coeffs(2 * pairs, cdouble(0.0));
  for (std::size_t n = 0; n < pairs; ++n) {
    const PairHyperbolics h = spec.alpha().hyper(n);
    const double a = scale * spec.chi(n) * h.ch /
                     (1.0 - mu * h.ch * h.ch);
    if (with_hyper) {
      coeffs[2 * n] = a * h.sh;
      coeffs[2 * n + 1] = a * h.ch;
    } else {
      coeffs[2 * n + 1] = a;
    }
  }
  std::optional<double> tail;
  if (spec.delta()) {
    const double delta = *spec.delta();
    const double c2_over_mu = scale * scale;
    // phi pair mass per omitted m: a^2 (cosh^2 + sinh^2) <= 2 a^2 cosh^2.
    const double q = with_hyper ? (delta - 1.0) : delta;
    const double factor = with_hyper ? 2.0 : 1.0;
    const double tail_sq =
        factor * c2_over_mu *
        inv_sq_tail(q, mu, static_cast<double>(pairs));
    tail = std::sqrt(tail_sq);
  }
  return TruncatedVector(std::move(coeffs), tail);
}

TruncatedVector krein_phi(const KreinFamilySpec& spec, std::size_t n,
                          const RootSet& roots) {
  if (n / 2 >= spec.pairs()) {
    throw validation_error("krein_phi: index beyond pair truncation");
  }
  if (n % 2 == 0) {
    const std::size_t k = n / 2;
    const PairHyperbolics h = spec.alpha().hyper(k);
    std::vector<cdouble> c(2 * k + 2, cdouble(0.0));
    c[2 * k] = h.ch;
    c[2 * k + 1] = h.sh;
    return TruncatedVector(std::move(c));
  }
  return odd_series(spec, n / 2, roots, /*with_hyper=*/true);
}

TruncatedVector krein_psi(const KreinFamilySpec& spec, std::size_t n,
                          const RootSet& roots) {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * apply_J(krein_phi(spec, n, roots));
}

TruncatedVector krein_e(const KreinFamilySpec& spec, std::size_t n,
                        const RootSet& roots) {
  if (n / 2 >= spec.pairs()) {
    throw validation_error("krein_e: index beyond pair truncation");
  }
  if (n % 2 == 0) return TruncatedVector::basis(n);
  return odd_series(spec, n / 2, roots, /*with_hyper=*/false);
}

TypeClassification classify_type(const KreinFamilySpec& spec) {
  TypeClassification out;
  out.chi_cosh_sq_exponent = spec.e_cosh_;
  out.chi_cosh2_sq_exponent = spec.e_cosh2_;
  if (spec.e_cosh2_ < -1.0) {
    throw validation_error(
        "classify_type: invalid family, {chi_n cosh^2 alpha_n} is in l2");
  }
  out.chi_cosh_in_l2 = spec.e_cosh_ < -1.0;
  out.verdict =
      out.chi_cosh_in_l2 ? SequenceType::SecondType : SequenceType::FirstType;
  return out;
}

}  // namespace grs
