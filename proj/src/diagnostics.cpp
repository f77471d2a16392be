#include "grs/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "grs/errors.hpp"
#include "grs/io.hpp"
#include "grs/jacobi.hpp"

namespace grs {

GramMatrix gram(const std::vector<TruncatedVector>& family) {
  GramMatrix g;
  g.size = family.size();
  g.entries.assign(g.size * g.size, cdouble(0.0));
  for (const TruncatedVector& v : family) {
    g.vector_len = std::max(g.vector_len, v.size());
    g.max_tail = std::max(g.max_tail, v.tail_bound.value_or(0.0));
  }
  for (std::size_t n = 0; n < g.size; ++n) {
    for (std::size_t m = n; m < g.size; ++m) {
      const cdouble val = inner(family[n], family[m]);
      g.entries[n * g.size + m] = val;
      g.entries[m * g.size + n] = std::conj(val);
    }
  }
  return g;
}

FrameBounds frame_bounds(const GramMatrix& g) {
  if (g.size == 0) throw validation_error("frame_bounds: empty Gram matrix");
  const std::vector<double> ev = hermitian_eigenvalues(g.entries, g.size, 1e-12);
  return {ev.front(), ev.back()};
}

OlevskiiResult olevskii_check(const std::vector<double>& spectrum_points,
                              double beta) {
  if (!(beta < 0.0)) {
    throw validation_error("olevskii_check: beta must be < 0");
  }
  if (spectrum_points.empty()) {
    throw validation_error("olevskii_check: empty spectrum sample");
  }
  const double lo_point =
      *std::min_element(spectrum_points.begin(), spectrum_points.end());
  // Only intervals fully inside the sampled range are decidable from a
  // finite sample: stop once (n+1) beta would drop below the lowest point.
  for (std::size_t n = 0; (static_cast<double>(n) + 1.0) * beta >= lo_point;
       ++n) {
    const double lo = (static_cast<double>(n) + 1.0) * beta;
    const double hi = static_cast<double>(n) * beta;
    bool hit = false;
    for (double p : spectrum_points) {
      if (p >= lo && p <= hi) {
        hit = true;
        break;
      }
    }
    if (!hit) return {false, n};
  }
  return {true, std::nullopt};
}

KreinFamilyData build_krein_family_data(const KreinFamilySpec& spec,
                                        std::size_t max_index) {
  KreinFamilyData d;
  const std::size_t root_count = max_index / 2 + 1;
  d.roots = solve_family_roots(spec, root_count);
  d.T = build_T(spec.alpha(), spec.pairs());
  d.q = build_Q_family(spec.alpha(), spec.pairs());
  for (std::size_t n = 0; n <= max_index; ++n) {
    d.phi.push_back(krein_phi(spec, n, d.roots));
    d.psi.push_back(krein_psi(spec, n, d.roots));
    d.e.push_back(krein_e(spec, n, d.roots));
  }
  return d;
}

static double delta_fn(std::size_t n, std::size_t m) {
  return n == m ? 1.0 : 0.0;
}

DiagnosticsReport residual_suite(const KreinFamilySpec& spec,
                                 const KreinFamilyData& data,
                                 const ResidualTolerances& tols) {
  DiagnosticsReport rep;
  rep.family = "krein";
  if (spec.delta()) {
    rep.params.emplace_back("delta", format_double(*spec.delta()));
  }
  rep.truncation.emplace_back("pairs", std::to_string(spec.pairs()));
  rep.truncation.emplace_back("terms", std::to_string(spec.terms()));
  rep.truncation.emplace_back("max_index", std::to_string(data.phi.size() - 1));
  double max_tail = 0.0;
  for (const TruncatedVector& v : data.phi) {
    max_tail = std::max(max_tail, v.tail_bound.value_or(0.0));
  }
  rep.truncation.emplace_back("max_tail_bound", format_double(max_tail));

  const std::size_t count = data.phi.size();

  double bio = 0.0, jorth = 0.0, eorth = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t m = 0; m < count; ++m) {
      bio = std::max(bio, std::abs(inner(data.psi[n], data.phi[m]) -
                                   delta_fn(n, m)));
      jorth = std::max(jorth,
                       std::fabs(std::abs(j_inner(data.phi[n], data.phi[m])) -
                                 delta_fn(n, m)));
      eorth = std::max(eorth, std::abs(inner(data.e[n], data.e[m]) -
                                       delta_fn(n, m)));
    }
  }
  rep.add_check("biorthogonality", bio, tols.truncated);
  rep.add_check("j_orthonormality", jorth, tols.truncated);
  rep.add_check("e_orthonormality", eorth, tols.truncated);

  double rec = 0.0, inv_rec = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    rec = std::max(rec, norm(apply(data.q.exp_Q_half, data.e[n]) - data.phi[n]) /
                            norm(data.phi[n]));
    inv_rec = std::max(
        inv_rec, norm(apply(data.q.exp_minus_Q_half, data.phi[n]) - data.e[n]));
  }
  rep.add_check("reconstruction_phi_eq_expQhalf_e", rec, tols.truncated);
  rep.add_check("reconstruction_e_eq_expMinusQhalf_phi", inv_rec,
                tols.truncated);

  rep.add_check("cayley_identity",
                cayley_identity_residual(data.T, data.q.exp_minus_Q),
                tols.cayley);
  rep.add_check("c_symmetry", c_symmetry_residual(data.q.exp_minus_Q, data.phi),
                tols.truncated);
  rep.add_check("anticommutation_JT", j_conjugation_residual(data.T, -1.0),
                tols.machine);
  rep.add_check("anticommutation_JQ", j_conjugation_residual(data.q.Q, -1.0),
                tols.machine);

  // S-form identity: the pairing matrix [(psi_n, phi_m)] applied to a fixed
  // coefficient vector must reproduce it.
  double s_form = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    cdouble acc(0.0);
    for (std::size_t m = 0; m < count; ++m) {
      const double cm = 1.0 / static_cast<double>(m + 1);
      acc += inner(data.psi[n], data.phi[m]) * cm;
    }
    s_form = std::max(s_form,
                      std::abs(acc - cdouble(1.0 / static_cast<double>(n + 1))));
  }
  rep.add_check("s_form_identity", s_form, tols.truncated);

  return rep;
}

DiagnosticsReport semiregular_suite(
    const SemiRegularSpec& spec, const std::vector<std::size_t>& witness_sizes,
    const ResidualTolerances& tols) {
  DiagnosticsReport rep;
  rep.family = "semiregular";
  rep.params.emplace_back("alpha", format_double(spec.alpha));
  rep.params.emplace_back("beta", format_double(spec.beta));

  const SemiRegularClassification cls = semiregular_classify(spec);
  rep.params.emplace_back("complete", cls.complete ? "true" : "false");
  const char* verdict = "undetermined";
  switch (cls.grs) {
    case GrsVerdict::Yes: verdict = "yes"; break;
    case GrsVerdict::No: verdict = "no"; break;
    case GrsVerdict::Undetermined: verdict = "undetermined"; break;
    case GrsVerdict::NotApplicable: verdict = "not-applicable"; break;
  }
  rep.params.emplace_back("grs", verdict);

  const std::size_t max_index = 8;
  double bio = 0.0;
  for (std::size_t n = 1; n <= max_index; ++n) {
    for (std::size_t m = 1; m <= max_index; ++m) {
      bio = std::max(bio, std::abs(inner(semiregular_phi(spec, n),
                                         semiregular_psi(spec, m)) -
                                   delta_fn(n, m)));
    }
  }
  rep.add_check("biorthogonality", bio, 1e-14);

  for (std::size_t N : witness_sizes) {
    const NonGrsWitness w = witness_family(spec, N);
    rep.params.emplace_back("witness_N" + std::to_string(N) + "_s_form",
                            format_double(w.s_form));
    rep.params.emplace_back("witness_N" + std::to_string(N) + "_dist_to_e0",
                            format_double(w.dist_to_e0));
    // dist^2 * D_N = 1 exactly, up to float residual.
    rep.add_check("witness_norm_closed_form_N" + std::to_string(N),
                  std::fabs(w.dist_to_e0 * w.dist_to_e0 * w.d_n - 1.0),
                  tols.exact);
  }
  return rep;
}

}  // namespace grs
