#include <doctest.h>

#include <cmath>

#include "grs/block_operator.hpp"
#include "grs/errors.hpp"
#include "grs/krein.hpp"

using namespace grs;

namespace {

// Small shared instance so each test case does not re-solve the roots.
struct Family {
  KreinFamilySpec spec;
  RootSet roots;
};

const Family& family_05() {
  static const Family f = [] {
    KreinFamilySpec s = KreinFamilySpec::delta_family(0.5, 2000, 200000);
    return Family{s, solve_family_roots(s, 4)};
  }();
  return f;
}

const Family& family_15() {
  static const Family f = [] {
    KreinFamilySpec s = KreinFamilySpec::delta_family(1.5, 2000, 200000);
    return Family{s, solve_family_roots(s, 4)};
  }();
  return f;
}

}  // namespace

TEST_CASE("even phi vectors are exact two-term hyperbolic pairs") {
  const Family& f = family_05();
  const auto p0 = krein_phi(f.spec, 0, f.roots);
  CHECK(std::abs(p0.at(0) - cdouble(1.0)) == 0.0);  // alpha_0 = 0
  CHECK(std::abs(p0.at(1)) == 0.0);

  // k = 2: cosh = sqrt(3), sinh = sqrt(2)
  const auto p4 = krein_phi(f.spec, 4, f.roots);
  CHECK(p4.at(4).real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(p4.at(5).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(std::abs(p4.at(0)) == 0.0);
  CHECK(std::abs(j_inner(p4, p4) - cdouble(1.0)) < 1e-12);
}

TEST_CASE("odd phi vectors are J-normalized to -1") {
  const Family& f = family_15();
  const auto p1 = krein_phi(f.spec, 1, f.roots);
  CHECK(std::abs(j_inner(p1, p1) - cdouble(-1.0)) < 1e-6);
  const auto p3 = krein_phi(f.spec, 3, f.roots);
  CHECK(std::abs(j_inner(p3, p3) - cdouble(-1.0)) < 1e-6);
  CHECK(std::abs(j_inner(p1, p3)) < 1e-6);
}

TEST_CASE("psi is the signed J image and biorthogonal to phi") {
  const Family& f = family_15();
  const auto psi0 = krein_psi(f.spec, 0, f.roots);
  CHECK(std::abs(psi0.at(0) - cdouble(1.0)) == 0.0);

  const auto psi1 = krein_psi(f.spec, 1, f.roots);
  const auto p1 = krein_phi(f.spec, 1, f.roots);
  const auto p3 = krein_phi(f.spec, 3, f.roots);
  CHECK(std::abs(inner(p1, psi1) - cdouble(1.0)) < 1e-6);
  CHECK(std::abs(inner(p3, psi1)) < 1e-6);
  // psi_1 = -J phi_1 coefficientwise
  const auto diff = psi1 + apply_J(p1);
  CHECK(norm(diff) == 0.0);
}

TEST_CASE("e vectors: even are canonical, odd are orthonormal in the limit") {
  const Family& f = family_05();
  const auto e4 = krein_e(f.spec, 4, f.roots);
  CHECK(std::abs(e4.at(4) - cdouble(1.0)) == 0.0);
  CHECK(e4.size() == 5);

  const auto e1 = krein_e(f.spec, 1, f.roots);
  const auto e3 = krein_e(f.spec, 3, f.roots);
  CHECK(std::abs(inner(e1, e1) - cdouble(1.0)) < 1e-5);
  CHECK(std::abs(inner(e1, e3)) < 1e-5);
  // only odd components
  CHECK(std::abs(e1.at(0)) == 0.0);
  CHECK(std::abs(e1.at(2)) == 0.0);
}

TEST_CASE("phi reconstructs as exp(Q/2) applied to e") {
  const Family& f = family_05();
  const auto q = build_Q_family(f.spec.alpha(), f.spec.pairs());
  const auto e1 = krein_e(f.spec, 1, f.roots);
  const auto p1 = krein_phi(f.spec, 1, f.roots);
  const double rel = norm(apply(q.exp_Q_half, e1) - p1) / norm(p1);
  CHECK(rel < 1e-6);
}

TEST_CASE("type classification") {
  CHECK(classify_type(KreinFamilySpec::delta_family(0.5, 8)).verdict ==
        SequenceType::FirstType);
  CHECK(classify_type(KreinFamilySpec::delta_family(1.0, 8)).verdict ==
        SequenceType::FirstType);
  CHECK(classify_type(KreinFamilySpec::delta_family(1.5, 8)).verdict ==
        SequenceType::SecondType);
  CHECK(classify_type(KreinFamilySpec::delta_family(2.0, 8)).verdict ==
        SequenceType::SecondType);
  CHECK_THROWS_AS(classify_type(KreinFamilySpec::delta_family(2.5, 8)), Error);
}

TEST_CASE("classification exponents for the delta family") {
  const auto c = classify_type(KreinFamilySpec::delta_family(1.5, 8));
  CHECK(c.chi_cosh_sq_exponent == doctest::Approx(-1.5));
  CHECK(c.chi_cosh2_sq_exponent == doctest::Approx(-0.5));
  CHECK(c.chi_cosh_in_l2);
}

TEST_CASE("input validation") {
  const Family& f = family_05();
  // odd vector needs root k; only 4 were solved
  CHECK_THROWS_AS(krein_phi(f.spec, 9, f.roots), Error);
  CHECK_NOTHROW(krein_phi(f.spec, 7, f.roots));

  // tiny truncation: the tail certificate cannot be issued
  KreinFamilySpec small = KreinFamilySpec::delta_family(0.5, 2, 100);
  const RootSet rs = solve_family_roots(small, 1);
  CHECK_THROWS_AS(krein_phi(small, 1, rs), Error);

  CHECK_THROWS_AS(KreinFamilySpec::delta_family(0.0, 8), Error);
  CHECK_THROWS_AS(KreinFamilySpec::delta_family(1.0, 0), Error);
}

TEST_CASE("secular problem wiring") {
  const KreinFamilySpec s = KreinFamilySpec::delta_family(1.0, 4, 500);
  const SecularProblem p = s.secular_problem();
  CHECK(p.terms() == 500);
  CHECK(p.weight(0) == doctest::Approx(1.0));
  CHECK(p.weight(1) == doctest::Approx(0.5));
  CHECK(p.scale(2) == doctest::Approx(3.0));
  CHECK(s.chi(0) == doctest::Approx(1.0));
  CHECK(s.chi(1) == doctest::Approx(std::pow(2.0, -1.0)));
}
