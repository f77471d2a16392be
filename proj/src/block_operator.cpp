#include "grs/block_operator.hpp"

#include <algorithm>
#include <cmath>

#include "grs/errors.hpp"

namespace grs {

namespace {
constexpr double kSafeExponent = 700.0;
}

double Mat2::max_abs() const {
  return std::max({std::fabs(a00), std::fabs(a01), std::fabs(a10),
                   std::fabs(a11)});
}

double Mat2::op_norm() const {
  // 2x2 spectral norm via singular values of [[a,b],[c,d]].
  const double f = a00 * a00 + a01 * a01 + a10 * a10 + a11 * a11;
  const double d = det();
  const double disc = std::max(0.0, f * f - 4.0 * d * d);
  return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

AlphaSequence AlphaSequence::from_alpha(
    std::function<double(std::size_t)> alpha, bool divergent_declared) {
  AlphaSequence s;
  s.alpha_ = std::move(alpha);
  s.divergent_ = divergent_declared;
  return s;
}

AlphaSequence AlphaSequence::from_tanh(
    std::function<double(std::size_t)> tanh_alpha, bool divergent_declared) {
  AlphaSequence s;
  s.tanh_ = std::move(tanh_alpha);
  s.divergent_ = divergent_declared;
  return s;
}

AlphaSequence AlphaSequence::constant(double a0) {
  AlphaSequence s;
  s.alpha_ = [a0](std::size_t) { return a0; };
  s.divergent_ = false;
  s.relaxed_ = true;
  return s;
}

AlphaSequence AlphaSequence::special_family() {
  return from_tanh([](std::size_t n) {
    return std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1));
  });
}

double AlphaSequence::alpha(std::size_t k) const {
  if (alpha_) return alpha_(k);
  return std::atanh(tanh_(k));
}

PairHyperbolics AlphaSequence::hyper(std::size_t k) const {
  if (tanh_) {
    const double t = tanh_(k);
    if (!(t > -1.0 && t < 1.0)) {
      throw numerical_error("AlphaSequence: |tanh alpha| must be < 1");
    }
    const double ch = 1.0 / std::sqrt((1.0 - t) * (1.0 + t));
    return {ch, t * ch, t};
  }
  const double a = alpha_(k);
  if (std::fabs(a) > kSafeExponent) {
    throw numerical_error("AlphaSequence: alpha exceeds safe exponent range");
  }
  return {std::cosh(a), std::sinh(a), std::tanh(a)};
}

void AlphaSequence::validate_prefix(std::size_t pairs) const {
  if (relaxed_ || pairs == 0) return;
  double prev = tanh_ ? tanh_(0) : alpha_(0);
  if (prev < 0.0) {
    throw validation_error("AlphaSequence: alpha_0 must be >= 0");
  }
  for (std::size_t k = 1; k < pairs; ++k) {
    const double cur = tanh_ ? tanh_(k) : alpha_(k);
    if (!(cur > prev)) {
      throw validation_error("AlphaSequence: not strictly increasing");
    }
    prev = cur;
  }
}

double BlockOperator::max_block_norm() const {
  double m = 0.0;
  for (const Mat2& b : blocks) m = std::max(m, b.op_norm());
  return m;
}

BlockOperator BlockOperator::identity(std::size_t pairs) {
  BlockOperator op;
  op.blocks.assign(pairs, Mat2::identity());
  op.self_adjoint = true;
  return op;
}

Mat2 exp_sigma1_block(double a) {
  if (!std::isfinite(a)) {
    throw validation_error("exp_sigma1_block: a must be finite");
  }
  if (std::fabs(a) > kSafeExponent) {
    throw numerical_error(
        "exp_sigma1_block: |a| exceeds safe exponent range; "
        "truncation level too aggressive");
  }
  const double ch = std::cosh(a);
  const double sh = std::sinh(a);
  return {ch, sh, sh, ch};
}

BlockOperator build_T(const AlphaSequence& alpha, std::size_t pairs) {
  if (pairs < 1) throw validation_error("build_T: pairs must be >= 1");
  alpha.validate_prefix(pairs);
  BlockOperator op;
  op.blocks.reserve(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    const double t = alpha.hyper(k).th;
    op.blocks.push_back({0.0, t, t, 0.0});
  }
  op.self_adjoint = true;
  return op;
}

QFamily build_Q_family(const AlphaSequence& alpha, std::size_t pairs) {
  if (pairs < 1) throw validation_error("build_Q_family: pairs must be >= 1");
  alpha.validate_prefix(pairs);
  QFamily fam;
  fam.Q.blocks.reserve(pairs);
  fam.exp_Q_half.blocks.reserve(pairs);
  fam.exp_minus_Q_half.blocks.reserve(pairs);
  fam.exp_minus_Q.blocks.reserve(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    const PairHyperbolics h = alpha.hyper(k);
    const double a = alpha.alpha(k);
    if (std::fabs(2.0 * a) > kSafeExponent) {
      throw numerical_error("build_Q_family: 2 alpha exceeds safe range");
    }
    fam.Q.blocks.push_back({0.0, 2.0 * a, 2.0 * a, 0.0});
    fam.exp_Q_half.blocks.push_back({h.ch, h.sh, h.sh, h.ch});
    fam.exp_minus_Q_half.blocks.push_back({h.ch, -h.sh, -h.sh, h.ch});
    // cosh 2a = ch^2 + sh^2, sinh 2a = 2 ch sh
    const double ch2 = h.ch * h.ch + h.sh * h.sh;
    const double sh2 = 2.0 * h.ch * h.sh;
    fam.exp_minus_Q.blocks.push_back({ch2, -sh2, -sh2, ch2});
  }
  fam.Q.self_adjoint = true;
  fam.exp_Q_half.self_adjoint = true;
  fam.exp_minus_Q_half.self_adjoint = true;
  fam.exp_minus_Q.self_adjoint = true;
  return fam;
}

double cayley_identity_residual(const BlockOperator& T,
                                const BlockOperator& exp_minus_Q) {
  if (T.pairs() != exp_minus_Q.pairs()) {
    throw validation_error("cayley_identity_residual: pair count mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < T.pairs(); ++k) {
    const Mat2& t = T.blocks[k];
    Mat2 i_plus_t{1.0 + t.a00, t.a01, t.a10, 1.0 + t.a11};
    Mat2 i_minus_t{1.0 - t.a00, -t.a01, -t.a10, 1.0 - t.a11};
    if (std::fabs(i_plus_t.det()) < 1e-14) {
      throw numerical_error(
          "cayley_identity_residual: I+T numerically singular "
          "(tanh alpha_k ~ 1, alpha overflowed)");
    }
    const Mat2 lhs = exp_minus_Q.blocks[k].mul(i_plus_t);
    Mat2 diff{lhs.a00 - i_minus_t.a00, lhs.a01 - i_minus_t.a01,
              lhs.a10 - i_minus_t.a10, lhs.a11 - i_minus_t.a11};
    worst = std::max(worst, diff.max_abs());
  }
  return worst;
}

TruncatedVector apply(const BlockOperator& op, const TruncatedVector& v) {
  if (v.size() > 2 * op.pairs()) {
    throw validation_error("apply: vector longer than operator truncation");
  }
  const std::size_t npairs = (v.size() + 1) / 2;
  std::vector<cdouble> out(2 * npairs, cdouble(0.0));
  for (std::size_t k = 0; k < npairs; ++k) {
    const Mat2& b = op.blocks[k];
    const cdouble x = v.at(2 * k);
    const cdouble y = v.at(2 * k + 1);
    out[2 * k] = b.a00 * x + b.a01 * y;
    out[2 * k + 1] = b.a10 * x + b.a11 * y;
  }
  std::optional<double> tail;
  if (v.tail_bound) tail = *v.tail_bound * op.max_block_norm();
  return TruncatedVector(std::move(out), tail);
}

double c_symmetry_residual(const BlockOperator& exp_minus_Q,
                           const std::vector<TruncatedVector>& phi) {
  double worst = 0.0;
  for (std::size_t n = 0; n < phi.size(); ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const TruncatedVector lhs = apply(exp_minus_Q, phi[n]);
    const TruncatedVector rhs = sign * apply_J(phi[n]);
    worst = std::max(worst, norm(lhs - rhs) / norm(phi[n]));
  }
  return worst;
}

double j_conjugation_residual(const BlockOperator& B, double sign) {
  double worst = 0.0;
  for (const Mat2& b : B.blocks) {
    // J restricted to a pair is diag(1, -1): (JBJ) flips the off-diagonal.
    Mat2 jbj{b.a00, -b.a01, -b.a10, b.a11};
    Mat2 diff{jbj.a00 - sign * b.a00, jbj.a01 - sign * b.a01,
              jbj.a10 - sign * b.a10, jbj.a11 - sign * b.a11};
    worst = std::max(worst, diff.max_abs());
  }
  return worst;
}

}  // namespace grs
