#ifndef GRS_VECTOR_HPP
#define GRS_VECTOR_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace grs {

using cdouble = std::complex<double>;

/// Finite coefficient vector with respect to the canonical ONB {e_0, e_1, ...}.
/// An optional tail bound certifies the l2-norm of the omitted coefficients.
struct TruncatedVector {
  std::vector<cdouble> coeffs;
  std::optional<double> tail_bound;

  TruncatedVector() = default;
  explicit TruncatedVector(std::vector<cdouble> c,
                           std::optional<double> tail = std::nullopt);

  std::size_t size() const { return coeffs.size(); }
  cdouble at(std::size_t n) const {
    return n < coeffs.size() ? coeffs[n] : cdouble(0.0);
  }

  /// Canonical basis vector e_n, materialized at length max(len, n+1).
  static TruncatedVector basis(std::size_t n, std::size_t len = 0);
};

TruncatedVector operator+(const TruncatedVector& u, const TruncatedVector& v);
TruncatedVector operator-(const TruncatedVector& u, const TruncatedVector& v);
TruncatedVector operator*(cdouble a, const TruncatedVector& u);

/// Sum u_n conj(v_n); shorter vector zero-padded. Linear in the first slot.
cdouble inner(const TruncatedVector& u, const TruncatedVector& v);

/// Krein-space inner product [u, v] = (Ju, v) with J e_n = (-1)^n e_n.
cdouble j_inner(const TruncatedVector& u, const TruncatedVector& v);

double norm(const TruncatedVector& u);

/// Interval [norm, sqrt(norm^2 + tail^2)] covering the untruncated norm.
struct NormInterval {
  double lo;
  double hi;
};
NormInterval norm_interval(const TruncatedVector& u);

/// Parity symmetry J e_n = (-1)^n e_n. J^2 = I and J is isometric.
struct FundamentalSymmetry {
  TruncatedVector operator()(const TruncatedVector& u) const;
  static int sign(std::size_t n) { return (n % 2 == 0) ? 1 : -1; }
};

TruncatedVector apply_J(const TruncatedVector& u);

}  // namespace grs

#endif
