#include "lgtt/io.hpp"

#include <cstdio>
#include <fstream>

#include "lgtt/parse.hpp"

namespace lgtt {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt_cplx(cplx v) { return fmt_double(v.real()) + (v.imag() < 0 ? "" : "+") + fmt_double(v.imag()) + "i"; }

ojson json_cplx(cplx v) { return ojson{{"re", v.real()}, {"im", v.imag()}}; }

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return j;
}

namespace {

cplx cplx_from_json(const ojson& v) {
  if (v.is_number()) return cplx(v.get<double>(), 0);
  if (v.is_array() && v.size() == 2) return cplx(v[0].get<double>(), v[1].get<double>());
  if (v.is_object()) {
    auto get = [&](const char* key) -> double {
      if (!v.contains(key)) return 0;
      const auto& x = v.at(key);
      if (x.is_string()) return Rat(x.get<std::string>()).to_double();
      return x.get<double>();
    };
    return cplx(get("re"), get("im"));
  }
  throw ConfigError("complex value must be a number, [re, im], or {re, im}");
}

}  // namespace

JobConfig parse_config(const ojson& j) {
  JobConfig c;
  if (!j.contains("variables") || !j.contains("polynomial"))
    throw ConfigError("config needs 'variables' and 'polynomial'");
  for (auto& v : j.at("variables")) c.variables.push_back(v.get<std::string>());
  c.polynomial = j.at("polynomial").get<std::string>();
  if (j.contains("deformation"))
    for (auto& d : j.at("deformation")) c.deformation.push_back(d.get<std::string>());
  if (j.contains("u")) {
    for (auto& v : j.at("u")) {
      c.u_values.push_back(cplx_from_json(v));
      if (v.is_object() && v.contains("re") && v.at("re").is_string()) {
        Rat re(v.at("re").get<std::string>());
        Rat im = v.contains("im") && v.at("im").is_string()
                     ? Rat(v.at("im").get<std::string>())
                     : Rat(0);
        c.u_exact.push_back({GQ(re, im)});
      }
    }
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (g.contains("center")) c.grid_center = cplx_from_json(g.at("center"));
    if (g.contains("radius")) c.grid_radius = g.at("radius").get<double>();
    if (g.contains("count")) c.grid_count = g.at("count").get<int>();
    if (c.grid_count < 1) throw ConfigError("grid count must be >= 1");
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    auto opt = [&](const char* k, double& slot) {
      if (t.contains(k)) {
        slot = t.at(k).get<double>();
        if (slot <= 0) throw ConfigError(std::string("tolerance must be positive: ") + k);
      }
    };
    opt("series", c.tol_series);
    opt("ode", c.tol_ode);
    opt("fd_step", c.fd_step);
    opt("verify", c.tol_verify);
    opt("wp", c.tol_wp);
    opt("forbidden", c.tol_forbidden);
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    if (o.contains("path")) c.out_path = o.at("path").get<std::string>();
    if (o.contains("format")) c.format = o.at("format").get<std::string>();
    if (c.format != "json" && c.format != "csv")
      throw ConfigError("output format must be 'json' or 'csv'");
  }
  return c;
}

LGPotential JobConfig::build_potential(const std::vector<GQ>& u_exact) const {
  GPoly f = parse_polynomial(polynomial, variables);
  WeightSystem w = infer_weights(f);
  std::vector<Monomial> psis;
  for (auto& d : deformation) {
    GPoly p = parse_polynomial(d, variables);
    if (p.term_count() != 1 || !(p.terms().begin()->second == GQ(1)))
      throw ConfigError("deformation entries must be single monomials: " + d);
    psis.push_back(p.terms().begin()->first);
  }
  std::vector<GQ> u = u_exact;
  if (u.empty()) u.assign(psis.size(), GQ(0));
  if (u.size() != psis.size())
    throw ConfigError("parameter count does not match deformation count");
  return LGPotential(f, w, psis, u);
}

ojson basis_json(const JacobiBasis& B, const std::vector<std::string>& vars) {
  ojson arr = ojson::array();
  for (long a = 0; a < B.mu; ++a) {
    arr.push_back(ojson{{"monomial", B.monomials[a].str(vars)},
                        {"degree", B.monomials[a].deg()},
                        {"charge", B.charges[a]}});
  }
  return arr;
}

ojson pf_json(const PicardFuchsODE& ode) {
  ojson coeffs = ojson::array();
  for (auto& p : ode.coeffs) {
    ojson terms = ojson::array();
    for (size_t k = 0; k < p.c.size(); ++k)
      terms.push_back(ojson{{"power", k}, {"coeff", p.c[k].str()}});
    coeffs.push_back(ojson{{"poly", p.str()}, {"terms", terms}});
  }
  ojson roots = ojson::array();
  for (auto& r : ode.singular_points) roots.push_back(json_cplx(r));
  return ojson{{"order", ode.order},
               {"coefficients", coeffs},
               {"singular_points", ojson{{"leading_coefficient", ode.coeffs.back().str()},
                                         {"roots", roots},
                                         {"infinity", true}}}};
}

ojson ruan_json(const RuanReport& r) {
  return ojson{{"N", r.N},
               {"det", r.det},
               {"fit_rounding", r.fit_rounding},
               {"max_residual", r.max_residual},
               {"pass", r.pass}};
}

ojson pairing_json(const PairingReport& r) {
  return ojson{{"max_relative_residual", r.max_relative_residual},
               {"max_forbidden", r.max_forbidden},
               {"pass", r.pass}};
}

namespace {
ojson mat_json(const std::vector<std::vector<cplx>>& M) {
  ojson rows = ojson::array();
  for (auto& row : M) {
    ojson r = ojson::array();
    for (auto& v : row) r.push_back(json_cplx(v));
    rows.push_back(r);
  }
  return rows;
}
}  // namespace

ojson fit_json(const FitReport& r) {
  return ojson{{"fitted", mat_json(r.fitted)},
               {"in_cy_basis", mat_json(r.in_cy_basis)},
               {"entry_mismatch", r.entry_mismatch},
               {"fit_residual", r.fit_residual},
               {"half_grid_drift", r.half_grid_drift},
               {"pass", r.pass}};
}

ojson wp_json(const WPReport& r) {
  ojson frames = ojson::array();
  for (auto& f : r.frames) {
    frames.push_back(ojson{{"u", json_cplx(f.u)},
                           {"h00", f.h00},
                           {"G_wp", f.G_lg},
                           {"G_lg", f.G_lg},
                           {"G_cy", f.G_cy},
                           {"residuals", f.residuals}});
  }
  return ojson{{"max_relative_difference", r.max_relative_difference},
               {"max_richardson_drift", r.max_richardson_drift},
               {"pass", r.pass},
               {"frames", frames}};
}

void write_periods_csv(std::ostream& os, const PeriodMatrix& PM) {
  os << "u_re,u_im,side,thimble,basis_index,value_re,value_im,method,tol\n";
  auto row = [&](const char* side, long k, long a, cplx v) {
    os << fmt_double(PM.u.real()) << ',' << fmt_double(PM.u.imag()) << ',' << side << ',' << k
       << ',' << a << ',' << fmt_double(v.real()) << ',' << fmt_double(v.imag()) << ','
       << PM.method << ',' << fmt_double(PM.tol) << '\n';
  };
  for (long k = 0; k < PM.rank; ++k)
    for (long a = 0; a < PM.mu; ++a) row("minus", k, a, PM.minus[k][a]);
  for (long k = 0; k < PM.rank; ++k)
    for (long a = 0; a < PM.mu; ++a) row("plus", k, a, PM.plus[k][a]);
}

void write_wp_csv(std::ostream& os, const WPReport& rep) {
  os << "u_re,u_im,h00,G_lg,G_cy,rel_diff,richardson_drift\n";
  for (auto& f : rep.frames) {
    os << fmt_double(f.u.real()) << ',' << fmt_double(f.u.imag()) << ',' << fmt_double(f.h00)
       << ',' << fmt_double(f.G_lg) << ',' << fmt_double(f.G_cy) << ','
       << fmt_double(f.residuals.at("wp_equality")) << ','
       << fmt_double(f.residuals.at("richardson_drift")) << '\n';
  }
}

ojson error_json(const std::string& code, const std::string& message) {
  return ojson{{"code", code}, {"message", message}};
}

}  // namespace lgtt
