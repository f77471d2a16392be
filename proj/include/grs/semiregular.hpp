#ifndef GRS_SEMIREGULAR_HPP
#define GRS_SEMIREGULAR_HPP

#include <cstddef>

#include "grs/vector.hpp"

namespace grs {

/// Parameters of the two-term family phi_n = n^{-beta} e_n + n^{-alpha} e_0,
/// n = 1, 2, ... The family is complete iff alpha - beta <= 1/2.
struct SemiRegularSpec {
  double alpha;
  double beta;

  bool complete() const { return alpha - beta <= 0.5; }
};

/// phi_n = n^{-beta} e_n + n^{-alpha} e_0, n >= 1.
TruncatedVector semiregular_phi(const SemiRegularSpec& spec, std::size_t n);

/// psi_n = n^{beta} e_n, the biorthogonal partner.
TruncatedVector semiregular_psi(const SemiRegularSpec& spec, std::size_t n);

enum class GrsVerdict { Yes, No, Undetermined, NotApplicable };

struct SemiRegularClassification {
  bool complete;
  GrsVerdict grs;
};

/// beta <= 0: never a GRS. beta > 0 and alpha > 1/2: GRS. Remaining complete
/// region: undetermined. Incomplete families (alpha - beta > 1/2) are outside
/// the semi-regular regime and get NotApplicable.
SemiRegularClassification semiregular_classify(const SemiRegularSpec& spec);

/// Witness data for the failure of the GRS criterion in the beta <= 0 regime:
/// f = sum_{n<=N} c_n phi_n with c_n = n^{2 beta - alpha} / D_N drives the
/// quadratic form (Sf, f) to zero while f converges to e_0 != 0.
struct NonGrsWitness {
  TruncatedVector f;
  double s_form;      // (Sf, f) = sum c_n^2
  double dist_to_e0;  // ||f - e_0|| = D_N^{-1/2}
  double d_n;         // the normalizer D_N
};

NonGrsWitness non_grs_witness(const SemiRegularSpec& spec, std::size_t N);

/// Same construction evaluated outside the beta <= 0 regime (where the
/// witness is expected to fail); used for the GRS-regime contrast scan.
NonGrsWitness witness_family(const SemiRegularSpec& spec, std::size_t N);

}  // namespace grs

#endif
