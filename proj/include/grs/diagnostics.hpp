#ifndef GRS_DIAGNOSTICS_HPP
#define GRS_DIAGNOSTICS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "grs/block_operator.hpp"
#include "grs/krein.hpp"
#include "grs/report.hpp"
#include "grs/semiregular.hpp"
#include "grs/vector.hpp"

namespace grs {

/// Finite-section surrogate for the frame inequality: G[n][m] = (phi_n, phi_m).
struct GramMatrix {
  std::vector<cdouble> entries;  // row major, size * size
  std::size_t size = 0;
  std::size_t vector_len = 0;
  double max_tail = 0.0;

  cdouble at(std::size_t n, std::size_t m) const {
    return entries[n * size + m];
  }
};

GramMatrix gram(const std::vector<TruncatedVector>& family);

/// Extreme Gram eigenvalues. For a Riesz basis with bounds (a, b), finite
/// sections satisfy a <= lambda_min <= lambda_max <= b; these are one-sided
/// finite-section estimates, never infinite-dimensional certificates.
struct FrameBounds {
  double lambda_min;
  double lambda_max;
};

FrameBounds frame_bounds(const GramMatrix& g);

/// Olevskii interval condition (checker on a declared spectrum sample):
/// every interval [(n+1) beta, n beta], beta < 0, must contain a point.
struct OlevskiiResult {
  bool satisfied;
  std::optional<std::size_t> first_empty_interval;
};

OlevskiiResult olevskii_check(const std::vector<double>& spectrum_points,
                              double beta);

struct ResidualTolerances {
  double exact = 1e-10;       // identities that hold in exact arithmetic
  double machine = 1e-14;     // entrywise operator identities
  double cayley = 1e-12;
  double truncated = 1e-6;    // identities limited by series truncation
};

/// Vectors and operators of a Krein family at a common truncation.
struct KreinFamilyData {
  std::vector<TruncatedVector> phi;
  std::vector<TruncatedVector> psi;
  std::vector<TruncatedVector> e;
  BlockOperator T;
  QFamily q;
  RootSet roots;
};

KreinFamilyData build_krein_family_data(const KreinFamilySpec& spec,
                                        std::size_t max_index);

/// Residual suite over the family identities: biorthogonality,
/// J-orthonormality, reconstruction phi_n = e^{Q/2} e_n, Cayley,
/// C-symmetry, anticommutation, and the S-form identity. Individual entries
/// may fail; the suite always completes.
DiagnosticsReport residual_suite(const KreinFamilySpec& spec,
                                 const KreinFamilyData& data,
                                 const ResidualTolerances& tols = {});

/// Residual suite for the two-term family: exact biorthogonality, the
/// witness closed forms, and the classification verdicts.
DiagnosticsReport semiregular_suite(const SemiRegularSpec& spec,
                                    const std::vector<std::size_t>& witness_sizes,
                                    const ResidualTolerances& tols = {});

}  // namespace grs

#endif
