// lgtt: Landau-Ginzburg B-model algebra and period toolkit.
// Subcommands: analyze | basis | residue | connection | pf | periods | wp | verify

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lgtt/io.hpp"
#include "lgtt/odeflow.hpp"
#include "lgtt/parse.hpp"

using namespace lgtt;

namespace {

struct CheckLine {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw ConfigError("cannot open output path: " + cfg.out_path);
  out << text;
}

bool is_hesse_family(const JobConfig& cfg, const LGPotential& P) {
  (void)cfg;
  return P.nvars() == 3 && diagonal_exponents(P.f) == std::vector<int>{3, 3, 3} &&
         P.s() == 1 && P.marginals[0] == Monomial{1, 1, 1};
}

ojson analyze_json(const JobConfig& cfg) {
  LGPotential P = cfg.build_potential();
  GJacobiRing ring(P);
  const JacobiBasis& B = ring.basis();
  long mu = ring.milnor();
  ojson weights = ojson::array();
  for (auto& q : P.w.q) weights.push_back(q.str());
  ojson marginals = ojson::array();
  for (auto& m : ring.marginal_monomials()) marginals.push_back(m.str(cfg.variables));
  return ojson{{"weights", weights},
               {"d", P.w.d},
               {"Q", P.w.Q},
               {"central_charge", central_charge(P.w).str()},
               {"mu", mu},
               {"mu_prime", B.mu_prime},
               {"s", marginals.size()},
               {"basis", basis_json(B, cfg.variables)},
               {"marginals", marginals}};
}

std::vector<GQ> exact_u_or_zero(const JobConfig& cfg, size_t s) {
  if (!cfg.u_exact.empty()) {
    if (cfg.u_exact[0].size() != s && s != 0)
      throw ConfigError("exact u entry count does not match deformation count");
    return cfg.u_exact[0];
  }
  for (auto& u : cfg.u_values)
    if (u != cplx(0))
      throw ConfigError("algebraic subcommands need exact u values (strings like \"1/10\")");
  return std::vector<GQ>(s, GQ(0));
}

int cmd_analyze(const JobConfig& cfg) {
  emit(cfg, analyze_json(cfg).dump(2));
  return 0;
}

int cmd_basis(const JobConfig& cfg) {
  LGPotential P0 = cfg.build_potential();
  LGPotential P = cfg.build_potential(exact_u_or_zero(cfg, P0.marginals.size()));
  GJacobiRing ring(P);
  const JacobiBasis& B = ring.basis();
  ojson j{{"mu", B.mu},
          {"mu_prime", B.mu_prime},
          {"socle_index", B.socle_index},
          {"hessian_socle_coeff", B.hessian_socle_coeff.str()},
          {"prime_indices", B.prime_indices},
          {"basis", basis_json(B, cfg.variables)}};
  emit(cfg, j.dump(2));
  return 0;
}

int cmd_residue(const JobConfig& cfg) {
  LGPotential P0 = cfg.build_potential();
  LGPotential P = cfg.build_potential(exact_u_or_zero(cfg, P0.marginals.size()));
  ResidueFunctional R(P);
  ojson j{{"mu", R.mu()}, {"socle_normalizer", R.socle_normalizer().str()}};
  GPoly hess = R.ring().hessian_determinant();
  j["res_hessian"] = R(hess).str();
  if (R.mu() <= 64) {
    auto G = R.gram();
    ojson rows = ojson::array();
    for (auto& row : G) {
      ojson r = ojson::array();
      for (auto& v : row) r.push_back(v.str());
      rows.push_back(r);
    }
    j["gram"] = rows;
    j["gram_nondegenerate"] = is_gaussian_rank_full(G);
  }
  emit(cfg, j.dump(2));
  return 0;
}

int cmd_connection(const JobConfig& cfg) {
  LGPotential P0 = cfg.build_potential();
  LGPotential P = cfg.build_potential(exact_u_or_zero(cfg, P0.marginals.size()));
  GJacobiRing ring(P);
  ConnectionMatrices M = c_matrices(ring);
  ojson dirs = ojson::array();
  for (int i = 0; i < P.s(); ++i) {
    ojson entry{{"direction", P.marginals[i].str(cfg.variables)},
                {"nonzero_entries", M.C[i].nonzeros()}};
    if (i < static_cast<int>(M.restricted_C.size())) {
      ojson restricted = ojson::array();
      for (auto& row : M.restricted_C[i]) {
        ojson r = ojson::array();
        for (auto& v : row) r.push_back(v.str());
        restricted.push_back(r);
      }
      entry["restricted_C"] = restricted;
    }
    dirs.push_back(entry);
  }
  // sampled exact commutativity
  std::mt19937 rng(12345);
  int pairs = std::min(20, P.s() * (P.s() - 1) / 2);
  bool commute = true;
  for (int t = 0; t < pairs; ++t) {
    int i = static_cast<int>(rng() % P.s());
    int j = static_cast<int>(rng() % P.s());
    if (i == j) continue;
    commute = commute && c_matrices_commute(M, i, j);
  }
  ojson out{{"mu", M.mu}, {"mu_prime", M.mu_prime}, {"commutators_vanish", commute},
            {"directions", dirs}};
  emit(cfg, out.dump(2));
  return commute ? 0 : 1;
}

int cmd_pf(const JobConfig& cfg) {
  LGPotential P = cfg.build_potential();
  if (P.s() != 1) throw ConfigError("pf needs exactly one deformation direction");
  PicardFuchsODE ode = picard_fuchs(P, 0);
  emit(cfg, pf_json(ode).dump(2));
  return 0;
}

int cmd_periods(const JobConfig& cfg) {
  LGPotential P = cfg.build_potential();
  JacobiBasis B = compute_basis(P);
  std::vector<cplx> grid = cfg.u_values;
  if (grid.empty()) grid = disc_grid(cfg.grid_center, cfg.grid_radius, cfg.grid_count);
  std::ostringstream os;
  if (cfg.format == "csv") {
    bool first = true;
    for (cplx u : grid) {
      PeriodMatrix PM = series_periods(P, B, u, cfg.tol_series);
      std::ostringstream one;
      write_periods_csv(one, PM);
      std::string s = one.str();
      if (!first) s = s.substr(s.find('\n') + 1);  // keep a single header
      os << s;
      first = false;
    }
  } else {
    ojson arr = ojson::array();
    for (cplx u : grid) {
      PeriodMatrix PM = series_periods(P, B, u, cfg.tol_series);
      ojson rows = ojson::array();
      for (long k = 0; k < PM.rank; ++k)
        for (long a = 0; a < PM.mu; ++a)
          rows.push_back(ojson{{"side", "minus"}, {"thimble", k}, {"basis_index", a},
                               {"value", json_cplx(PM.minus[k][a])}});
      for (long k = 0; k < PM.rank; ++k)
        for (long a = 0; a < PM.mu; ++a)
          rows.push_back(ojson{{"side", "plus"}, {"thimble", k}, {"basis_index", a},
                               {"value", json_cplx(PM.plus[k][a])}});
      arr.push_back(ojson{{"u", json_cplx(u)}, {"method", PM.method}, {"tol", PM.tol},
                          {"entries", rows}});
    }
    os << ojson{{"periods", arr}}.dump(2);
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_wp(const JobConfig& cfg) {
  LGPotential P = cfg.build_potential();
  if (!is_hesse_family(cfg, P))
    throw ConfigError("wp requires the n=3 Hesse family configuration");
  HesseVerifier V(P, cfg.tol_series);
  int per_side = cfg.grid_count;
  double half = cfg.grid_radius / std::sqrt(2.0);
  WPReport rep = V.wp_equality(square_grid(cfg.grid_center, half, per_side), cfg.fd_step,
                               cfg.tol_wp, 1e-5);
  std::ostringstream os;
  if (cfg.format == "csv") write_wp_csv(os, rep);
  else os << wp_json(rep).dump(2);
  emit(cfg, os.str());
  return rep.pass ? 0 : 1;
}

int cmd_verify(const JobConfig& cfg) {
  LGPotential P = cfg.build_potential();
  std::vector<CheckLine> checks;
  ojson detail = ojson::object();

  GJacobiRing ring(P);
  const JacobiBasis& B = ring.basis();
  long mu = ring.milnor();
  checks.push_back({"counts", 0.0, 0.0, mu == B.mu});
  detail["counts"] = ojson{{"mu", mu}, {"mu_prime", B.mu_prime},
                           {"s", ring.marginal_monomials().size()},
                           {"central_charge", central_charge(P.w).str()}};

  if (P.s() >= 2) {
    std::mt19937 rng(2024);
    ConnectionMatrices M = c_matrices(ring);
    bool commute = true;
    for (int t = 0; t < 40; ++t) {
      int i = static_cast<int>(rng() % P.s());
      int j = static_cast<int>(rng() % P.s());
      commute = commute && c_matrices_commute(M, i, j);
    }
    checks.push_back({"c_commutators", 0.0, 0.0, commute});
  }

  if (is_hesse_family(cfg, P)) {
    HesseVerifier V(P, cfg.tol_series);
    auto grid = disc_grid(cfg.grid_center, std::min(cfg.grid_radius, 1.0), cfg.grid_count);
    RuanReport ruan = V.verify_ruan(grid, cfg.tol_verify, cfg.debug_perturb_constant);
    checks.push_back({"ruan_period_correspondence", ruan.max_residual, cfg.tol_verify, ruan.pass});
    detail["ruan"] = ruan_json(ruan);

    PairingReport pair = V.verify_pairing_chain(grid, cfg.tol_verify, cfg.tol_forbidden);
    checks.push_back({"pairing_chain", pair.max_relative_residual, cfg.tol_verify, pair.pass});
    checks.push_back({"forbidden_pairings", pair.max_forbidden, cfg.tol_forbidden, pair.pass});
    detail["pairing_chain"] = pairing_json(pair);

    FitReport fit = V.fit_intersection_lg(grid, cfg.tol_wp);
    checks.push_back({"intersection_fit", fit.entry_mismatch, cfg.tol_wp, fit.pass});
    detail["intersection_fit"] = fit_json(fit);

    WPReport wp = V.wp_equality(square_grid(cfg.grid_center, 0.35, 5), cfg.fd_step,
                                cfg.tol_wp, 1e-5);
    checks.push_back({"wp_equality", wp.max_relative_difference, cfg.tol_wp, wp.pass});
    detail["wp_equality"] = ojson{{"max_relative_difference", wp.max_relative_difference},
                                  {"max_richardson_drift", wp.max_richardson_drift}};
  }

  bool all_pass = true;
  ojson rows = ojson::array();
  for (auto& c : checks) {
    all_pass = all_pass && c.pass;
    rows.push_back(ojson{{"check", c.name}, {"residual", c.residual},
                         {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  ojson out{{"checks", rows}, {"pass", all_pass}, {"detail", detail}};
  emit(cfg, out.dump(2));
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Ginzburg B-model algebra and period toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  JobConfig cfg;
  std::string out_path, format;
  double tol_series = -1, tol_ode = -1, tol_verify = -1, fd_step = -1, tol_wp = -1;
  double grid_radius = -1;
  int grid_count = -1;
  double perturb = 0;

  app.add_option("--config", config_path, "job configuration JSON file");
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--format", format, "json|csv");
  app.add_option("--tol-series", tol_series, "series truncation tolerance");
  app.add_option("--tol-ode", tol_ode, "ODE continuation tolerance");
  app.add_option("--tol-verify", tol_verify, "verification residual tolerance");
  app.add_option("--tol-wp", tol_wp, "metric comparison tolerance");
  app.add_option("--fd-step", fd_step, "finite difference step");
  app.add_option("--grid-radius", grid_radius, "grid radius");
  app.add_option("--grid-count", grid_count, "grid point count");
  app.add_option("--debug-perturb-constant", perturb,
                 "negative control: scale the period-correspondence constant by (1+x)");

  auto* analyze = app.add_subcommand("analyze", "weights, charges, basis summary");
  auto* basis = app.add_subcommand("basis", "full Jacobi basis data");
  auto* residue = app.add_subcommand("residue", "residue functional and Gram matrix");
  auto* connection = app.add_subcommand("connection", "multiplication operators C_i");
  auto* pf = app.add_subcommand("pf", "Picard-Fuchs operator for the family");
  auto* periods = app.add_subcommand("periods", "thimble period tables over a grid");
  auto* wp = app.add_subcommand("wp", "Weil-Petersson metric from both sides");
  auto* verify = app.add_subcommand("verify", "run the correspondence identity suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (config_path.empty()) throw ConfigError("--config is required");
    cfg = parse_config(load_json_file(config_path));
    if (!out_path.empty()) cfg.out_path = out_path;
    if (!format.empty()) cfg.format = format;
    if (tol_series > 0) cfg.tol_series = tol_series;
    if (tol_ode > 0) cfg.tol_ode = tol_ode;
    if (tol_verify > 0) cfg.tol_verify = tol_verify;
    if (tol_wp > 0) cfg.tol_wp = tol_wp;
    if (fd_step > 0) cfg.fd_step = fd_step;
    if (grid_radius > 0) cfg.grid_radius = grid_radius;
    if (grid_count > 0) cfg.grid_count = grid_count;
    cfg.debug_perturb_constant = perturb;

    if (analyze->parsed()) return cmd_analyze(cfg);
    if (basis->parsed()) return cmd_basis(cfg);
    if (residue->parsed()) return cmd_residue(cfg);
    if (connection->parsed()) return cmd_connection(cfg);
    if (pf->parsed()) return cmd_pf(cfg);
    if (periods->parsed()) return cmd_periods(cfg);
    if (wp->parsed()) return cmd_wp(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return 2;
  } catch (const ParseError& e) {
    ojson err = error_json("parse_error", e.what());
    err["position"] = e.position;
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << error_json("invalid_config", e.what()).dump() << '\n';
    return 2;
  } catch (const WeightError& e) {
    std::cerr << error_json("weight_error", e.what()).dump() << '\n';
    return 2;
  } catch (const DegenerateError& e) {
    std::cerr << error_json("degenerate_potential", e.what()).dump() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << error_json("numeric_failure", e.what()).dump() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << error_json("domain_error", e.what()).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_json("internal_error", e.what()).dump() << '\n';
    return 3;
  }
}
