#include <doctest.h>

#include <cmath>
#include <random>

#include "grs/errors.hpp"
#include "grs/vector.hpp"

using namespace grs;

namespace {

TruncatedVector random_vector(std::mt19937& rng, std::size_t len) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cdouble> c(len);
  for (auto& z : c) z = cdouble(d(rng), d(rng));
  return TruncatedVector(std::move(c));
}

}  // namespace

TEST_CASE("inner product on basis vectors") {
  const auto e0 = TruncatedVector::basis(0);
  const auto e1 = TruncatedVector::basis(1);
  CHECK(inner(e0, e0) == cdouble(1.0));
  CHECK(inner(e0, e1) == cdouble(0.0));
  CHECK(inner(cdouble(1.0, 1.0) * e0, e0) == cdouble(1.0, 1.0));
}

TEST_CASE("j_inner parity signs") {
  const auto e0 = TruncatedVector::basis(0);
  const auto e1 = TruncatedVector::basis(1);
  CHECK(j_inner(e1, e1) == cdouble(-1.0));
  CHECK(j_inner(e0, e1) == cdouble(0.0));
}

TEST_CASE("j_inner of cosh/sinh pair is 1 for any alpha") {
  for (double a : {0.0, 0.3, 1.0, 2.5, 5.0}) {
    TruncatedVector phi({std::cosh(a), std::sinh(a)});
    // cosh^2 - sinh^2 cancels at magnitude cosh^2, so the error is relative
    CHECK(std::abs(j_inner(phi, phi) - cdouble(1.0)) <
          1e-15 * std::cosh(a) * std::cosh(a) + 1e-15);
  }
}

TEST_CASE("norm examples") {
  CHECK(norm(TruncatedVector::basis(3)) == doctest::Approx(1.0));
  CHECK(norm(TruncatedVector({3.0, 4.0})) == doctest::Approx(5.0));
  CHECK(norm(TruncatedVector(std::vector<cdouble>{})) == 0.0);
}

TEST_CASE("norm interval covers the tail") {
  TruncatedVector v({3.0, 4.0}, 1.0);
  const NormInterval iv = norm_interval(v);
  CHECK(iv.lo == doctest::Approx(5.0));
  CHECK(iv.hi == doctest::Approx(std::sqrt(26.0)));
}

TEST_CASE("rejects non-finite coefficients and negative tails") {
  CHECK_THROWS_AS(TruncatedVector({cdouble(1.0 / 0.0, 0.0)}), Error);
  CHECK_THROWS_AS(TruncatedVector({1.0}, -0.5), Error);
}

TEST_CASE("J involution, isometry, and inner product identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_vector(rng, 1 + trial % 11);
    const auto v = random_vector(rng, 1 + (trial * 3) % 13);
    const auto ju = apply_J(u);

    CHECK(norm(apply_J(ju) - u) == 0.0);            // J^2 = I
    CHECK(norm(ju) == doctest::Approx(norm(u)));    // isometry
    // J self-adjoint through the indefinite product.
    CHECK(std::abs(j_inner(u, v) - std::conj(j_inner(v, u))) < 1e-12);
    // [Ju, Jv] = [u, v] and (Ju, v) = [u, v].
    CHECK(std::abs(j_inner(ju, apply_J(v)) - j_inner(u, v)) < 1e-12);
    CHECK(std::abs(inner(ju, v) - j_inner(u, v)) < 1e-12);
    // Cauchy-Schwarz through the J isometry.
    CHECK(std::abs(j_inner(u, v)) <= norm(u) * norm(v) + 1e-12);
  }
}

TEST_CASE("zero padding on combination") {
  TruncatedVector a({1.0, 2.0});
  TruncatedVector b({1.0, 2.0, 3.0, 4.0});
  const auto s = a + b;
  CHECK(s.size() == 4);
  CHECK(s.at(3) == cdouble(4.0));
  CHECK(s.at(0) == cdouble(2.0));
  CHECK(inner(a, b) == cdouble(5.0));
}
