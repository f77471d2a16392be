#include "grs/semiregular.hpp"

#include <cmath>
#include <vector>

#include "grs/errors.hpp"

namespace grs {

TruncatedVector semiregular_phi(const SemiRegularSpec& spec, std::size_t n) {
  if (n < 1) throw validation_error("semiregular_phi: n must be >= 1");
  const double x = static_cast<double>(n);
  std::vector<cdouble> c(n + 1, cdouble(0.0));
  c[0] = std::pow(x, -spec.alpha);
  c[n] = std::pow(x, -spec.beta);
  return TruncatedVector(std::move(c));
}

TruncatedVector semiregular_psi(const SemiRegularSpec& spec, std::size_t n) {
  if (n < 1) throw validation_error("semiregular_psi: n must be >= 1");
  std::vector<cdouble> c(n + 1, cdouble(0.0));
  c[n] = std::pow(static_cast<double>(n), spec.beta);
  return TruncatedVector(std::move(c));
}

SemiRegularClassification semiregular_classify(const SemiRegularSpec& spec) {
  SemiRegularClassification out;
  out.complete = spec.complete();
  if (!out.complete) {
    out.grs = GrsVerdict::NotApplicable;
  } else if (spec.beta <= 0.0) {
    out.grs = GrsVerdict::No;
  } else if (spec.alpha > 0.5) {
    out.grs = GrsVerdict::Yes;
  } else {
    out.grs = GrsVerdict::Undetermined;
  }
  return out;
}

NonGrsWitness witness_family(const SemiRegularSpec& spec, std::size_t N) {
  if (N < 1) throw validation_error("witness_family: N must be >= 1");
  // f = sum c_n phi_n lands on coefficient n^{beta-alpha}/D_N of e_n and
  // exactly 1 on e_0 since sum_n c_n n^{-alpha+beta} = D_N / D_N.
  double d_n = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    d_n += std::pow(static_cast<double>(n), 2.0 * (spec.beta - spec.alpha));
  }
  std::vector<cdouble> coeffs(N + 1, cdouble(0.0));
  coeffs[0] = 1.0;
  double s_form = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    const double x = static_cast<double>(n);
    const double cn = std::pow(x, 2.0 * spec.beta - spec.alpha) / d_n;
    coeffs[n] = std::pow(x, spec.beta - spec.alpha) / d_n;
    s_form += cn * cn;
  }
  NonGrsWitness w;
  w.f = TruncatedVector(std::move(coeffs));
  w.s_form = s_form;
  w.dist_to_e0 = 1.0 / std::sqrt(d_n);
  w.d_n = d_n;
  return w;
}

NonGrsWitness non_grs_witness(const SemiRegularSpec& spec, std::size_t N) {
  if (!(spec.beta <= 0.0)) {
    throw validation_error("non_grs_witness: requires beta <= 0");
  }
  if (!spec.complete()) {
    throw validation_error("non_grs_witness: requires alpha - beta <= 1/2");
  }
  return witness_family(spec, N);
}

}  // namespace grs
