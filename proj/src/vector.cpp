#include "grs/vector.hpp"

#include <algorithm>
#include <cmath>

#include "grs/errors.hpp"

namespace grs {

TruncatedVector::TruncatedVector(std::vector<cdouble> c,
                                 std::optional<double> tail)
    : coeffs(std::move(c)), tail_bound(tail) {
  for (const cdouble& z : coeffs) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw validation_error("TruncatedVector: non-finite coefficient");
    }
  }
  if (tail_bound && (!std::isfinite(*tail_bound) || *tail_bound < 0.0)) {
    throw validation_error("TruncatedVector: tail bound must be finite and >= 0");
  }
}

TruncatedVector TruncatedVector::basis(std::size_t n, std::size_t len) {
  std::vector<cdouble> c(std::max(len, n + 1), cdouble(0.0));
  c[n] = 1.0;
  return TruncatedVector(std::move(c));
}

static std::optional<double> combine_tails(const TruncatedVector& u,
                                           const TruncatedVector& v) {
  if (!u.tail_bound && !v.tail_bound) return std::nullopt;
  return u.tail_bound.value_or(0.0) + v.tail_bound.value_or(0.0);
}

TruncatedVector operator+(const TruncatedVector& u, const TruncatedVector& v) {
  std::vector<cdouble> c(std::max(u.size(), v.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = u.at(n) + v.at(n);
  return TruncatedVector(std::move(c), combine_tails(u, v));
}

TruncatedVector operator-(const TruncatedVector& u, const TruncatedVector& v) {
  std::vector<cdouble> c(std::max(u.size(), v.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = u.at(n) - v.at(n);
  return TruncatedVector(std::move(c), combine_tails(u, v));
}

TruncatedVector operator*(cdouble a, const TruncatedVector& u) {
  std::vector<cdouble> c(u.size());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a * u.coeffs[n];
  std::optional<double> tail;
  if (u.tail_bound) tail = std::abs(a) * *u.tail_bound;
  return TruncatedVector(std::move(c), tail);
}

cdouble inner(const TruncatedVector& u, const TruncatedVector& v) {
  const std::size_t n = std::min(u.size(), v.size());
  cdouble s(0.0);
  for (std::size_t k = 0; k < n; ++k) s += u.coeffs[k] * std::conj(v.coeffs[k]);
  return s;
}

cdouble j_inner(const TruncatedVector& u, const TruncatedVector& v) {
  const std::size_t n = std::min(u.size(), v.size());
  cdouble s(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s += sign * u.coeffs[k] * std::conj(v.coeffs[k]);
  }
  return s;
}

double norm(const TruncatedVector& u) {
  double s = 0.0;
  for (const cdouble& z : u.coeffs) s += std::norm(z);
  return std::sqrt(s);
}

NormInterval norm_interval(const TruncatedVector& u) {
  const double n = norm(u);
  const double t = u.tail_bound.value_or(0.0);
  return {n, std::sqrt(n * n + t * t)};
}

TruncatedVector apply_J(const TruncatedVector& u) {
  std::vector<cdouble> c(u.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = (n % 2 == 0) ? u.coeffs[n] : -u.coeffs[n];
  }
  return TruncatedVector(std::move(c), u.tail_bound);
}

TruncatedVector FundamentalSymmetry::operator()(const TruncatedVector& u) const {
  return apply_J(u);
}

}  // namespace grs
