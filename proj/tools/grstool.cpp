// grstool: build the generalized-Riesz-system example families, solve the
// secular root equation, and emit deterministic CSV/JSON/SVG diagnostics.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grs/diagnostics.hpp"
#include "grs/errors.hpp"
#include "grs/io.hpp"
#include "grs/jacobi.hpp"
#include "grs/krein.hpp"
#include "grs/secular.hpp"
#include "grs/semiregular.hpp"
#include "grs/svg.hpp"
#include "grs/vector.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCheckFailed = 4;

struct RunConfig {
  std::optional<double> delta;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::size_t pairs = 2000;
  std::size_t terms = 1000000;
  std::size_t roots = 5;
  double tol = 1e-12;
  std::string out = ".";
  std::string format = "csv";
  std::string kind = "phi";
  std::vector<std::size_t> indices;
  std::size_t max_index = 6;
};

// Command-line flags override the optional JSON config file; no environment
// variables are consulted.
void merge_config_file(const std::string& path, const CLI::App& cmd,
                       RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw grs::validation_error("config file not found: " + path);
  nlohmann::json j;
  in >> j;
  auto unset = [&cmd](const std::string& flag) {
    const CLI::Option* o = cmd.get_option_no_throw("--" + flag);
    return o == nullptr || o->count() == 0;
  };
  if (j.contains("delta") && unset("delta")) cfg.delta = j["delta"].get<double>();
  if (j.contains("alpha") && unset("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("beta") && unset("beta")) cfg.beta = j["beta"].get<double>();
  if (j.contains("pairs") && unset("pairs")) cfg.pairs = j["pairs"].get<std::size_t>();
  if (j.contains("terms") && unset("terms")) cfg.terms = j["terms"].get<std::size_t>();
  if (j.contains("roots") && unset("roots")) cfg.roots = j["roots"].get<std::size_t>();
  if (j.contains("tol") && unset("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("out") && unset("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("format") && unset("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("kind") && unset("kind")) cfg.kind = j["kind"].get<std::string>();
}

void validate_common(const RunConfig& cfg) {
  if (cfg.delta && !(*cfg.delta > 0.0 && *cfg.delta <= 2.0)) {
    throw grs::validation_error("delta must be in (0, 2]");
  }
  if (!(cfg.tol >= 1e-14)) throw grs::validation_error("tol must be >= 1e-14");
  if (cfg.pairs < 1) throw grs::validation_error("pairs must be >= 1");
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "svg") {
    throw grs::validation_error("format must be csv, json, or svg");
  }
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return cfg.out + "/" + name;
}

int cmd_roots(const RunConfig& cfg) {
  validate_common(cfg);
  std::vector<double> grid;
  if (cfg.delta) {
    grid.push_back(*cfg.delta);
  } else {
    for (int i = 1; i <= 8; ++i) grid.push_back(0.25 * i);
  }

  std::string csv = grs::csv_join({"delta", "root_index", "mu", "bracket_lo",
                                   "bracket_hi", "residual", "tail_bound"});
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<grs::SvgSeries> series(cfg.roots);
  for (std::size_t k = 0; k < cfg.roots; ++k) {
    series[k].label = "root " + std::to_string(k);
  }

  for (double delta : grid) {
    const grs::SecularProblem p = grs::SecularProblem::delta_family(delta, cfg.terms);
    const grs::RootSet rs = grs::solve_roots(p, cfg.roots, cfg.tol);
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      const grs::RootRecord& r = rs.roots[k];
      csv += grs::csv_join({grs::format_double(delta), std::to_string(k),
                            grs::format_double(r.mu),
                            grs::format_double(r.bracket_lo),
                            grs::format_double(r.bracket_hi),
                            grs::format_double(r.residual),
                            grs::format_double(r.tail_bound)});
      nlohmann::ordered_json row;
      row["delta"] = delta;
      row["root_index"] = k;
      row["mu"] = r.mu;
      row["bracket_lo"] = r.bracket_lo;
      row["bracket_hi"] = r.bracket_hi;
      row["residual"] = r.residual;
      row["tail_bound"] = r.tail_bound;
      rows.push_back(row);
      series[k].x.push_back(delta);
      series[k].y.push_back(r.mu);
    }
  }

  if (cfg.format == "json") {
    grs::atomic_write(out_path(cfg, "roots.json"), rows.dump(2) + "\n");
    std::cout << "wrote " << out_path(cfg, "roots.json") << "\n";
  } else {
    grs::atomic_write(out_path(cfg, "roots.csv"), csv);
    std::cout << "wrote " << out_path(cfg, "roots.csv") << "\n";
    if (cfg.format == "svg") {
      const std::string svg = grs::svg_scatter(
          series, "delta", "mu", "Secular equation roots");
      grs::atomic_write(out_path(cfg, "roots.svg"), svg);
      std::cout << "wrote " << out_path(cfg, "roots.svg") << "\n";
    }
  }
  return 0;
}

int cmd_construct(const RunConfig& cfg) {
  validate_common(cfg);
  if (cfg.kind != "phi" && cfg.kind != "psi" && cfg.kind != "e") {
    throw grs::validation_error("kind must be phi, psi, or e");
  }

  std::string csv = grs::csv_join({"kind", "n", "index", "re", "im"});
  nlohmann::ordered_json sidecar;
  sidecar["family"] = cfg.delta ? "krein" : "semiregular";
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (cfg.delta) params["delta"] = *cfg.delta;
  if (cfg.alpha) params["alpha"] = *cfg.alpha;
  if (cfg.beta) params["beta"] = *cfg.beta;
  sidecar["params"] = params;
  nlohmann::ordered_json trunc;
  trunc["pairs"] = cfg.pairs;
  trunc["terms"] = cfg.terms;
  sidecar["truncation"] = trunc;
  nlohmann::ordered_json vecs = nlohmann::ordered_json::array();

  auto emit = [&](std::size_t n, const grs::TruncatedVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v.coeffs[i] == grs::cdouble(0.0)) continue;
      csv += grs::csv_join({cfg.kind, std::to_string(n), std::to_string(i),
                            grs::format_double(v.coeffs[i].real()),
                            grs::format_double(v.coeffs[i].imag())});
    }
    nlohmann::ordered_json jv;
    jv["kind"] = cfg.kind;
    jv["n"] = n;
    jv["length"] = v.size();
    if (v.tail_bound) jv["tail_bound"] = *v.tail_bound;
    vecs.push_back(jv);
  };

  if (cfg.delta) {
    const grs::KreinFamilySpec spec = grs::KreinFamilySpec::delta_family(
        *cfg.delta, cfg.pairs, cfg.terms, cfg.tol);
    std::size_t max_root = 0;
    for (std::size_t n : cfg.indices) max_root = std::max(max_root, n / 2 + 1);
    grs::RootSet roots;
    if (max_root > 0) roots = grs::solve_family_roots(spec, max_root);
    for (std::size_t n : cfg.indices) {
      if (cfg.kind == "phi") emit(n, grs::krein_phi(spec, n, roots));
      else if (cfg.kind == "psi") emit(n, grs::krein_psi(spec, n, roots));
      else emit(n, grs::krein_e(spec, n, roots));
    }
  } else {
    if (!cfg.alpha || !cfg.beta) {
      throw grs::validation_error("construct: need --delta or --alpha/--beta");
    }
    const grs::SemiRegularSpec spec{*cfg.alpha, *cfg.beta};
    for (std::size_t n : cfg.indices) {
      if (cfg.kind == "psi") emit(n, grs::semiregular_psi(spec, n));
      else emit(n, grs::semiregular_phi(spec, n));
    }
  }

  grs::atomic_write(out_path(cfg, "construct.csv"), csv);
  sidecar["outputs"] = {out_path(cfg, "construct.csv")};
  grs::atomic_write(out_path(cfg, "construct.json"), sidecar.dump(2) + "\n");
  std::cout << "wrote " << out_path(cfg, "construct.csv") << "\n";
  return 0;
}

int finish_report(const RunConfig& cfg, grs::DiagnosticsReport& rep,
                  const std::string& name) {
  const std::string path = out_path(cfg, name);
  rep.outputs.push_back(path);
  grs::atomic_write(path, rep.to_json());
  std::cout << rep.to_text();
  std::cout << "wrote " << path << "\n";
  return rep.all_pass() ? 0 : kExitCheckFailed;
}

int cmd_semiregular(const RunConfig& cfg) {
  validate_common(cfg);
  if (!cfg.alpha || !cfg.beta) {
    throw grs::validation_error("semiregular: need --alpha and --beta");
  }
  const grs::SemiRegularSpec spec{*cfg.alpha, *cfg.beta};
  grs::DiagnosticsReport rep =
      grs::semiregular_suite(spec, {100, 1000, 10000});
  return finish_report(cfg, rep, "semiregular.json");
}

int cmd_verify(const RunConfig& cfg) {
  validate_common(cfg);
  if (!cfg.delta) throw grs::validation_error("verify: need --delta");
  const grs::KreinFamilySpec spec = grs::KreinFamilySpec::delta_family(
      *cfg.delta, cfg.pairs, cfg.terms, cfg.tol);
  const grs::KreinFamilyData data =
      grs::build_krein_family_data(spec, cfg.max_index);
  grs::DiagnosticsReport rep = grs::residual_suite(spec, data);

  const grs::TypeClassification cls = grs::classify_type(spec);
  rep.params.emplace_back("type", cls.verdict == grs::SequenceType::FirstType
                                      ? "first" : "second");
  return finish_report(cfg, rep, "verify.json");
}

int cmd_diagnose(const RunConfig& cfg) {
  validate_common(cfg);
  grs::DiagnosticsReport rep;
  std::vector<grs::TruncatedVector> family;
  const std::size_t count = cfg.max_index + 1;
  if (cfg.delta) {
    const grs::KreinFamilySpec spec = grs::KreinFamilySpec::delta_family(
        *cfg.delta, cfg.pairs, cfg.terms, cfg.tol);
    const grs::KreinFamilyData data =
        grs::build_krein_family_data(spec, cfg.max_index);
    family = data.phi;
    rep.family = "krein";
    rep.params.emplace_back("delta", grs::format_double(*cfg.delta));
  } else if (cfg.alpha && cfg.beta) {
    const grs::SemiRegularSpec spec{*cfg.alpha, *cfg.beta};
    for (std::size_t n = 1; n <= count; ++n) {
      family.push_back(grs::semiregular_phi(spec, n));
    }
    rep.family = "semiregular";
    rep.params.emplace_back("alpha", grs::format_double(*cfg.alpha));
    rep.params.emplace_back("beta", grs::format_double(*cfg.beta));
  } else {
    for (std::size_t n = 0; n < count; ++n) {
      family.push_back(grs::TruncatedVector::basis(n, count));
    }
    rep.family = "canonical";
  }
  const grs::GramMatrix g = grs::gram(family);
  const grs::FrameBounds fb = grs::frame_bounds(g);
  rep.params.emplace_back("section_size", std::to_string(g.size));
  rep.params.emplace_back("lambda_min", grs::format_double(fb.lambda_min));
  rep.params.emplace_back("lambda_max", grs::format_double(fb.lambda_max));

  double herm = 0.0;
  for (std::size_t n = 0; n < g.size; ++n) {
    for (std::size_t m = 0; m < g.size; ++m) {
      herm = std::max(herm, std::abs(g.at(n, m) - std::conj(g.at(m, n))));
    }
  }
  rep.add_check("gram_hermitian", herm, 1e-12);
  rep.add_check("gram_positive_semidefinite", std::max(0.0, -fb.lambda_min),
                1e-10);
  return finish_report(cfg, rep, "diagnose.json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Riesz system toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--delta", [&cfg](const std::vector<std::string>& v) {
      cfg.delta = std::stod(v[0]); return true; }, "family parameter delta");
    cmd->add_option("--alpha", [&cfg](const std::vector<std::string>& v) {
      cfg.alpha = std::stod(v[0]); return true; }, "exponent alpha");
    cmd->add_option("--beta", [&cfg](const std::vector<std::string>& v) {
      cfg.beta = std::stod(v[0]); return true; }, "exponent beta");
    cmd->add_option("--pairs", cfg.pairs, "pair truncation");
    cmd->add_option("--terms", cfg.terms, "series terms for the root equation");
    cmd->add_option("--roots", cfg.roots, "number of roots");
    cmd->add_option("--tol", cfg.tol, "root tolerance");
    cmd->add_option("--out", cfg.out, "output directory");
    cmd->add_option("--format", cfg.format, "csv|json|svg");
    cmd->add_option("--config", config_path, "JSON config file");
    return cmd;
  };

  CLI::App* roots = add_common(app.add_subcommand("roots",
      "solve the secular root equation over a delta grid"));
  CLI::App* construct = add_common(app.add_subcommand("construct",
      "emit family coefficient vectors"));
  construct->add_option("--kind", cfg.kind, "phi|psi|e");
  construct->add_option("--indices", cfg.indices, "vector indices")
      ->delimiter(',');
  CLI::App* diagnose = add_common(app.add_subcommand("diagnose",
      "Gram-section frame bound estimates"));
  diagnose->add_option("--max-index", cfg.max_index, "largest family index");
  CLI::App* semiregular = add_common(app.add_subcommand("semiregular",
      "classify the two-term family and run the witness scan"));
  CLI::App* verify = add_common(app.add_subcommand("verify",
      "run the residual suite for the Krein family"));
  verify->add_option("--max-index", cfg.max_index, "largest family index");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) merge_config_file(config_path, *active, cfg);
    if (active == roots) return cmd_roots(cfg);
    if (active == construct) return cmd_construct(cfg);
    if (active == diagnose) return cmd_diagnose(cfg);
    if (active == semiregular) return cmd_semiregular(cfg);
    if (active == verify) return cmd_verify(cfg);
  } catch (const grs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == grs::ErrorKind::Validation ? kExitValidation
                                                  : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
