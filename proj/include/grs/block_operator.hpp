#ifndef GRS_BLOCK_OPERATOR_HPP
#define GRS_BLOCK_OPERATOR_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "grs/vector.hpp"

namespace grs {

/// 2x2 real matrix, row major. All block operators built here are real
/// symmetric, so real entries are enough.
struct Mat2 {
  double a00 = 0.0, a01 = 0.0, a10 = 0.0, a11 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  Mat2 mul(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
  double det() const { return a00 * a11 - a01 * a10; }
  double max_abs() const;
  /// Spectral norm; symmetric blocks only need eigenvalue magnitudes.
  double op_norm() const;
};

/// cosh/sinh/tanh triple for one pair index.
struct PairHyperbolics {
  double ch;
  double sh;
  double th;
};

/// Generator of the sequence 0 <= alpha_0 < alpha_1 < ..., lim alpha_k = inf.
/// Monotonicity is validated on any materialized prefix; divergence is
/// declared metadata. A relaxed sequence (e.g. constant alpha for frame-bound
/// scans) skips the monotonicity check.
class AlphaSequence {
 public:
  static AlphaSequence from_alpha(std::function<double(std::size_t)> alpha,
                                  bool divergent_declared = true);
  /// Family given via tanh alpha_k; cosh/sinh derived as 1/sqrt(1-t^2), t*cosh
  /// so alpha itself is never materialized except where Q needs it.
  static AlphaSequence from_tanh(std::function<double(std::size_t)> tanh_alpha,
                                 bool divergent_declared = true);
  static AlphaSequence constant(double a0);
  /// tanh alpha_n = sqrt(n/(n+1)), the special family generator.
  static AlphaSequence special_family();

  double alpha(std::size_t k) const;
  PairHyperbolics hyper(std::size_t k) const;
  bool divergent_declared() const { return divergent_; }

  /// Validates strict monotonicity over k < pairs (unless relaxed).
  void validate_prefix(std::size_t pairs) const;

 private:
  AlphaSequence() = default;
  std::function<double(std::size_t)> alpha_;
  std::function<double(std::size_t)> tanh_;
  bool divergent_ = true;
  bool relaxed_ = false;
};

/// Self-adjoint operator with 2x2 block-diagonal structure: block k acts on
/// span{e_{2k}, e_{2k+1}}.
struct BlockOperator {
  std::vector<Mat2> blocks;
  bool self_adjoint = false;

  std::size_t pairs() const { return blocks.size(); }
  double max_block_norm() const;
  static BlockOperator identity(std::size_t pairs);
};

/// e^{a sigma1} = cosh(a) sigma0 + sinh(a) sigma1.
/// Throws for |a| beyond the safe double exponent range (~700).
Mat2 exp_sigma1_block(double a);

/// T e_{2k} = tanh(alpha_k) e_{2k+1}, T e_{2k+1} = tanh(alpha_k) e_{2k}.
BlockOperator build_T(const AlphaSequence& alpha, std::size_t pairs);

struct QFamily {
  BlockOperator Q;
  BlockOperator exp_Q_half;
  BlockOperator exp_minus_Q_half;
  BlockOperator exp_minus_Q;
};

/// Q = 2 sum (+) alpha_k sigma1 together with e^{Q/2}, e^{-Q/2}, e^{-Q}.
QFamily build_Q_family(const AlphaSequence& alpha, std::size_t pairs);

/// Max over blocks of the entrywise max-norm of e^{-Q}(I+T) - (I-T).
double cayley_identity_residual(const BlockOperator& T,
                                const BlockOperator& exp_minus_Q);

/// Blockwise matrix-vector product. Tail bound propagated through the
/// max block norm.
TruncatedVector apply(const BlockOperator& op, const TruncatedVector& v);

/// max_n ||e^{-Q} phi_n - (-1)^n J phi_n|| / ||phi_n||, the bounded form of
/// the C-symmetry identity C phi_n = (-1)^n phi_n.
double c_symmetry_residual(const BlockOperator& exp_minus_Q,
                           const std::vector<TruncatedVector>& phi);

/// Entrywise max-norm of J B J - sign * B (sign = -1 checks anticommutation).
double j_conjugation_residual(const BlockOperator& B, double sign);

}  // namespace grs

#endif
