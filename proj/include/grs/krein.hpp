#ifndef GRS_KREIN_HPP
#define GRS_KREIN_HPP

#include <cstddef>
#include <functional>
#include <optional>

#include "grs/block_operator.hpp"
#include "grs/secular.hpp"
#include "grs/vector.hpp"

namespace grs {

enum class SequenceType { FirstType, SecondType };

/// First/second type verdict from declared decay exponents. Membership of a
/// squared term sequence ~ n^e in l2 is the strict p-series test e < -1;
/// divergence is never decided from numeric partial sums.
struct TypeClassification {
  SequenceType verdict;
  double chi_cosh_sq_exponent;    // |chi_n cosh alpha_n|^2 ~ n^e
  double chi_cosh2_sq_exponent;   // |chi_n cosh^2 alpha_n|^2 ~ n^e
  bool chi_cosh_in_l2;
};

/// Parametric definition of the J-orthonormal family: generators alpha_k and
/// chi_n, or the special delta family tanh alpha_n = sqrt(n/(n+1)),
/// chi_n = (n+1)^{-(delta+1)/2}.
class KreinFamilySpec {
 public:
  static KreinFamilySpec delta_family(double delta, std::size_t pairs,
                                      std::size_t terms = 1000000,
                                      double root_tol = 1e-12);

  /// General family; chi(n) must be nonzero for every n. The two exponents
  /// declare the decay of the squared classification sequences.
  static KreinFamilySpec general(AlphaSequence alpha,
                                 std::function<double(std::size_t)> chi,
                                 double chi_cosh_sq_exponent,
                                 double chi_cosh2_sq_exponent,
                                 std::size_t pairs, std::size_t terms,
                                 double root_tol = 1e-12);

  std::size_t pairs() const { return pairs_; }
  std::size_t terms() const { return terms_; }
  double root_tol() const { return root_tol_; }
  std::optional<double> delta() const { return delta_; }
  const AlphaSequence& alpha() const { return alpha_; }
  double chi(std::size_t n) const;

  /// Root-equation data: w_n = |chi_n cosh alpha_n|^2, s_n = cosh^2 alpha_n.
  SecularProblem secular_problem() const;

 private:
  KreinFamilySpec() = default;
  std::optional<double> delta_;
  AlphaSequence alpha_ = AlphaSequence::special_family();
  std::function<double(std::size_t)> chi_;
  double e_cosh_ = 0.0;
  double e_cosh2_ = 0.0;
  std::size_t pairs_ = 0;
  std::size_t terms_ = 0;
  double root_tol_ = 1e-12;

  friend TypeClassification classify_type(const KreinFamilySpec& spec);
};

/// Convenience: solve the first `count` roots of the family's root equation.
RootSet solve_family_roots(const KreinFamilySpec& spec, std::size_t count);

/// phi_{2k} = cosh(a_k) e_{2k} + sinh(a_k) e_{2k+1} (exact two-term vector);
/// phi_{2k+1} = (c_k/sqrt(mu_k)) sum_n chi_n cosh(a_n)/(1 - mu_k cosh^2 a_n)
///              (cosh(a_n) e_{2n+1} + sinh(a_n) e_{2n}), truncated at the
/// pair count with a certified tail bound (delta family).
TruncatedVector krein_phi(const KreinFamilySpec& spec, std::size_t n,
                          const RootSet& roots);

/// psi_n = [phi_n, phi_n] J phi_n = (-1)^n J phi_n.
TruncatedVector krein_psi(const KreinFamilySpec& spec, std::size_t n,
                          const RootSet& roots);

/// e_{2k} = e_{2k}; e_{2k+1} = (c_k/sqrt(mu_k)) sum_n
///          chi_n cosh(a_n)/(1 - mu_k cosh^2 a_n) e_{2n+1}.
TruncatedVector krein_e(const KreinFamilySpec& spec, std::size_t n,
                        const RootSet& roots);

/// Theorem verdict: first type iff {chi_n cosh alpha_n} is not in l2.
/// Throws a validation error when {chi_n cosh^2 alpha_n} is in l2 (the
/// construction hypothesis fails; for the delta family this is delta > 2).
TypeClassification classify_type(const KreinFamilySpec& spec);

}  // namespace grs

#endif
