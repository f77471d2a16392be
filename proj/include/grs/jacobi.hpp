#ifndef GRS_JACOBI_HPP
#define GRS_JACOBI_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace grs {

/// Eigenvalues of a real symmetric matrix (row-major, size n*n) by cyclic
/// Jacobi rotations, swept until every off-diagonal entry is below `tol`.
/// Returns eigenvalues sorted ascending. Throws on non-convergence.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol = 1e-12);

/// Eigenvalues of a complex Hermitian matrix via the real symmetric
/// embedding [[Re, -Im], [Im, Re]]; each eigenvalue of the Hermitian matrix
/// appears twice in the embedding, so pairs are collapsed.
std::vector<double> hermitian_eigenvalues(
    const std::vector<std::complex<double>>& a, std::size_t n,
    double tol = 1e-12);

}  // namespace grs

#endif
