#include <doctest.h>

#include <cmath>

#include "grs/errors.hpp"
#include "grs/semiregular.hpp"

using namespace grs;

TEST_CASE("phi and psi coefficients") {
  const SemiRegularSpec unit{0.0, 0.0};
  const auto p1 = semiregular_phi(unit, 1);
  CHECK(p1.at(0) == cdouble(1.0));
  CHECK(p1.at(1) == cdouble(1.0));

  const SemiRegularSpec spec{1.0, 0.5};
  const auto p4 = semiregular_phi(spec, 4);
  CHECK(p4.at(0) == cdouble(0.25));
  CHECK(p4.at(4) == cdouble(0.5));
  CHECK(p4.at(2) == cdouble(0.0));

  const auto q4 = semiregular_psi(spec, 4);
  CHECK(q4.at(4) == cdouble(2.0));
  CHECK(q4.at(0) == cdouble(0.0));

  CHECK_THROWS_AS(semiregular_phi(spec, 0), Error);
  CHECK_THROWS_AS(semiregular_psi(spec, 0), Error);
}

TEST_CASE("biorthogonality is exact") {
  const SemiRegularSpec spec{0.9, 0.4};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const cdouble v = inner(semiregular_phi(spec, n), semiregular_psi(spec, m));
      // n^{-beta} * n^{beta} rounds; off-diagonal entries are exact zeros
      CHECK(std::abs(v - cdouble(n == m ? 1.0 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("classification") {
  // beta <= 0, complete: the witness defeats the lower frame bound.
  const auto a = semiregular_classify({0.4, 0.0});
  CHECK(a.complete);
  CHECK(a.grs == GrsVerdict::No);

  // beta > 0 and alpha > 1/2: bounded below.
  const auto b = semiregular_classify({1.0, 0.6});
  CHECK(b.complete);
  CHECK(b.grs == GrsVerdict::Yes);

  // complete but neither criterion applies
  const auto c = semiregular_classify({0.4, 0.1});
  CHECK(c.complete);
  CHECK(c.grs == GrsVerdict::Undetermined);

  // alpha - beta > 1/2: not complete
  const auto d = semiregular_classify({2.0, 1.0});
  CHECK_FALSE(d.complete);
  CHECK(d.grs == GrsVerdict::NotApplicable);
}

TEST_CASE("witness harmonic closed form at (1/2, 0)") {
  const SemiRegularSpec spec{0.5, 0.0};
  for (std::size_t N : {10u, 100u, 1000u}) {
    double harmonic = 0.0;
    for (std::size_t n = 1; n <= N; ++n) harmonic += 1.0 / n;
    const NonGrsWitness w = non_grs_witness(spec, N);
    CHECK(w.d_n == doctest::Approx(harmonic).epsilon(1e-13));
    CHECK(w.dist_to_e0 * w.dist_to_e0 * harmonic == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.s_form == doctest::Approx(1.0 / harmonic).epsilon(1e-12));
    // f has coefficient exactly 1 on e_0
    CHECK(w.f.at(0) == cdouble(1.0));
  }
}

TEST_CASE("s_form vanishes while dist stays bounded in the beta <= 0 regime") {
  const SemiRegularSpec spec{0.3, -0.1};
  double prev = 1e300;
  for (std::size_t N : {100u, 1000u, 10000u}) {
    const NonGrsWitness w = non_grs_witness(spec, N);
    CHECK(w.s_form < prev);
    CHECK(w.s_form <= 1.0 / w.d_n + 1e-12);
    CHECK(w.dist_to_e0 <= 1.0);
    prev = w.s_form;
  }
}

TEST_CASE("witness ratio grows in the GRS regime") {
  // at (1, 0.6) the family is a GRS, so (Sf, f) cannot vanish faster
  // than ||f||^2: the ratio s_form * D_N diverges.
  const SemiRegularSpec spec{1.0, 0.6};
  double prev = 0.0;
  for (std::size_t N : {100u, 1000u, 10000u}) {
    const NonGrsWitness w = witness_family(spec, N);
    const double ratio = w.s_form * w.d_n;
    CHECK(ratio > 2.0 * prev);
    prev = ratio;
  }
}

TEST_CASE("non_grs_witness regime checks") {
  CHECK_THROWS_AS(non_grs_witness({1.0, 0.6}, 100), Error);   // beta > 0
  CHECK_THROWS_AS(non_grs_witness({2.0, -1.0}, 100), Error);  // incomplete
  CHECK_THROWS_AS(non_grs_witness({0.5, 0.0}, 0), Error);
}
