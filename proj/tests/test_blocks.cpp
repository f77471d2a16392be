#include <doctest.h>

#include <cmath>
#include <random>

#include "grs/block_operator.hpp"
#include "grs/errors.hpp"
#include "grs/vector.hpp"

using namespace grs;

TEST_CASE("exp_sigma1_block basics") {
  const Mat2 id = exp_sigma1_block(0.0);
  CHECK(id.a00 == 1.0);
  CHECK(id.a01 == 0.0);

  // tanh a = sqrt(1/2), so cosh^2 a = 2.
  const double a = std::atanh(std::sqrt(0.5));
  const Mat2 m = exp_sigma1_block(a);
  CHECK(m.a00 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(m.a01 == doctest::Approx(1.0).epsilon(1e-12));

  // group law
  const Mat2 prod = exp_sigma1_block(1.3).mul(exp_sigma1_block(-1.3));
  CHECK(prod.a00 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(prod.a01) < 1e-12);

  CHECK_THROWS_AS(exp_sigma1_block(800.0), Error);
}

TEST_CASE("exp_sigma1_block determinant is 1") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> d(-300.0, 300.0);
  for (int i = 0; i < 100; ++i) {
    const double a = d(rng);
    // det = cosh^2 - sinh^2; relative check since entries can be ~e^300
    const Mat2 m = exp_sigma1_block(a);
    CHECK(std::fabs(m.det() - 1.0) <= 1e-12 * m.max_abs() * m.max_abs());
  }
  // Absolute accuracy is only possible while cosh^2 a stays small enough
  // that the cancellation in cosh^2 - sinh^2 resolves below 1e-12.
  for (double a : {-3.0, -0.5, 0.0, 0.5, 3.0}) {
    CHECK(std::fabs(exp_sigma1_block(a).det() - 1.0) < 1e-12);
  }
}

TEST_CASE("build_T blocks") {
  const AlphaSequence alpha = AlphaSequence::special_family();
  const BlockOperator t = build_T(alpha, 4);
  CHECK(t.blocks[0].max_abs() == 0.0);  // tanh alpha_0 = 0
  CHECK(t.blocks[1].a01 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(t.blocks[1].a00 == 0.0);
  for (const Mat2& b : t.blocks) CHECK(b.op_norm() < 1.0);
  // JT = -TJ on every basis vector
  CHECK(j_conjugation_residual(t, -1.0) == 0.0);
  for (std::size_t n = 0; n < 8; ++n) {
    const auto e = TruncatedVector::basis(n, 8);
    const auto jt = apply_J(apply(t, e));
    const auto tj = apply(t, apply_J(e));
    CHECK(norm(jt + tj) == 0.0);
  }
}

TEST_CASE("alpha sequence validation") {
  const AlphaSequence bad = AlphaSequence::from_alpha(
      [](std::size_t k) { return k == 2 ? 0.5 : static_cast<double>(k); });
  CHECK_THROWS_AS(build_T(bad, 4), Error);
  CHECK_NOTHROW(build_T(bad, 2));
  CHECK_THROWS_AS(build_T(AlphaSequence::special_family(), 0), Error);
}

TEST_CASE("build_Q_family identities") {
  const AlphaSequence alpha =
      AlphaSequence::from_alpha([](std::size_t k) { return 0.2 + 0.3 * k; });
  const QFamily q = build_Q_family(alpha, 6);

  for (std::size_t k = 0; k < 6; ++k) {
    // e^{Q/2} e^{-Q/2} = I
    const Mat2 prod = q.exp_Q_half.blocks[k].mul(q.exp_minus_Q_half.blocks[k]);
    CHECK(prod.a00 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(prod.a01) < 1e-12);
    // Q block eigenvalues are +-2 alpha_k (2x2 eigensolve of 2 a sigma1).
    const Mat2& qb = q.Q.blocks[k];
    const double tr = qb.a00 + qb.a11;
    const double disc = std::sqrt(tr * tr - 4.0 * qb.det());
    const double ev_hi = 0.5 * (tr + disc);
    CHECK(ev_hi == doctest::Approx(2.0 * alpha.alpha(k)).epsilon(1e-12));
    // e^{-Q} = (e^{-Q/2})^2
    const Mat2 sq = q.exp_minus_Q_half.blocks[k].mul(q.exp_minus_Q_half.blocks[k]);
    CHECK(sq.a00 == doctest::Approx(q.exp_minus_Q.blocks[k].a00).epsilon(1e-12));
    CHECK(sq.a01 == doctest::Approx(q.exp_minus_Q.blocks[k].a01).epsilon(1e-12));
  }
  CHECK(j_conjugation_residual(q.Q, -1.0) == 0.0);
}

TEST_CASE("cayley identity residual") {
  SUBCASE("alpha = 0 gives zero residual") {
    const AlphaSequence zero = AlphaSequence::constant(0.0);
    CHECK(cayley_identity_residual(build_T(zero, 4),
                                   build_Q_family(zero, 4).exp_minus_Q) == 0.0);
  }
  SUBCASE("special family, 8 pairs") {
    const AlphaSequence a = AlphaSequence::special_family();
    CHECK(cayley_identity_residual(build_T(a, 8),
                                   build_Q_family(a, 8).exp_minus_Q) <= 1e-12);
  }
  SUBCASE("perturbation is detected") {
    const AlphaSequence a = AlphaSequence::special_family();
    BlockOperator t = build_T(a, 8);
    t.blocks[3].a01 += 1e-3;
    CHECK(cayley_identity_residual(t, build_Q_family(a, 8).exp_minus_Q) >=
          1e-4);
  }
  SUBCASE("pair count mismatch") {
    const AlphaSequence a = AlphaSequence::special_family();
    CHECK_THROWS_AS(cayley_identity_residual(
                        build_T(a, 4), build_Q_family(a, 8).exp_minus_Q),
                    Error);
  }
  SUBCASE("near-singular I+T") {
    BlockOperator t;
    t.blocks.push_back({0.0, -1.0, -1.0, 0.0});  // tanh = -1 limit
    BlockOperator e = BlockOperator::identity(1);
    CHECK_THROWS_AS(cayley_identity_residual(t, e), Error);
  }
}

TEST_CASE("apply") {
  const AlphaSequence a = AlphaSequence::special_family();
  const BlockOperator t = build_T(a, 4);

  const auto v = TruncatedVector({1.0, -2.0, 3.0, 0.5});
  CHECK(norm(apply(BlockOperator::identity(4), v) - v) == 0.0);

  // T e_2 = tanh(alpha_1) e_3
  const auto te2 = apply(t, TruncatedVector::basis(2, 4));
  CHECK(std::abs(te2.at(3) - cdouble(std::sqrt(0.5))) < 1e-12);
  CHECK(std::abs(te2.at(2)) == 0.0);

  // e^{Q/2} e_0 = cosh a_0 e_0 + sinh a_0 e_1
  const AlphaSequence c = AlphaSequence::constant(0.7);
  const auto q = build_Q_family(c, 2);
  const auto r = apply(q.exp_Q_half, TruncatedVector::basis(0, 2));
  CHECK(r.at(0).real() == doctest::Approx(std::cosh(0.7)));
  CHECK(r.at(1).real() == doctest::Approx(std::sinh(0.7)));

  CHECK_THROWS_AS(apply(t, TruncatedVector::basis(9)), Error);
}

TEST_CASE("apply is linear") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const AlphaSequence alpha = AlphaSequence::special_family();
  const BlockOperator b = build_Q_family(alpha, 5).exp_minus_Q_half;
  for (int i = 0; i < 20; ++i) {
    std::vector<cdouble> uc(10), vc(10);
    for (auto& z : uc) z = cdouble(d(rng), d(rng));
    for (auto& z : vc) z = cdouble(d(rng), d(rng));
    const TruncatedVector u(uc), v(vc);
    const cdouble s(d(rng), d(rng)), t(d(rng), d(rng));
    const auto lhs = apply(b, s * u + t * v);
    const auto rhs = s * apply(b, u) + t * apply(b, v);
    CHECK(norm(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("c_symmetry residual") {
  SUBCASE("alpha = 0: phi_n = basis vectors, residual 0") {
    const AlphaSequence zero = AlphaSequence::constant(0.0);
    const auto q = build_Q_family(zero, 3);
    std::vector<TruncatedVector> phi;
    for (std::size_t n = 0; n < 6; ++n) phi.push_back(TruncatedVector::basis(n, 6));
    CHECK(c_symmetry_residual(q.exp_minus_Q, phi) == 0.0);
  }
  SUBCASE("generic vector is rejected") {
    const AlphaSequence a =
        AlphaSequence::from_alpha([](std::size_t k) { return 0.5 + 1.0 * k; });
    const auto q = build_Q_family(a, 3);
    std::vector<TruncatedVector> junk{TruncatedVector({0.3, 1.1, -0.4, 0.9})};
    CHECK(c_symmetry_residual(q.exp_minus_Q, junk) > 0.1);
  }
}
