#include "grs/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "grs/errors.hpp"

namespace grs {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol) {
  if (a.size() != n * n) {
    throw validation_error("jacobi_eigenvalues: size mismatch");
  }
  auto at = [&a, n](std::size_t i, std::size_t j) -> double& {
    return a[i * n + j];
  };

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(at(p, q)));
    }
    if (off < tol) {
      std::vector<double> ev(n);
      for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::fabs(apq) < 0.1 * tol) continue;
        const double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
        // Smaller-angle root keeps the rotation stable.
        double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = at(p, p);
        const double aqq = at(q, q);
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = at(i, p);
          const double aiq = at(i, q);
          at(i, p) = aip - s * (aiq + tau * aip);
          at(p, i) = at(i, p);
          at(i, q) = aiq + s * (aip - tau * aiq);
          at(q, i) = at(i, q);
        }
      }
    }
  }
  throw numerical_error("jacobi_eigenvalues: no convergence in 60 sweeps");
}

std::vector<double> hermitian_eigenvalues(
    const std::vector<std::complex<double>>& a, std::size_t n, double tol) {
  if (a.size() != n * n) {
    throw validation_error("hermitian_eigenvalues: size mismatch");
  }
  const std::size_t m = 2 * n;
  std::vector<double> r(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::complex<double>& z = a[i * n + j];
      r[i * m + j] = z.real();
      r[(i + n) * m + (j + n)] = z.real();
      r[i * m + (j + n)] = -z.imag();
      r[(i + n) * m + j] = z.imag();
    }
  }
  std::vector<double> ev = jacobi_eigenvalues(std::move(r), m, tol);
  // Doubled spectrum: take every second entry of the sorted list.
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (ev[2 * i] + ev[2 * i + 1]);
  return out;
}

}  // namespace grs
