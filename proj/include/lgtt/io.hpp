#ifndef LGTT_IO_HPP
#define LGTT_IO_HPP

#include <ostream>
#include <string>

#include "json.hpp"
#include "lgtt/gaussmanin.hpp"
#include "lgtt/periods.hpp"
#include "lgtt/ttstar.hpp"

namespace lgtt {

using ojson = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CLI job description; parsed from the config JSON, flag overrides applied
// by the tool. Deformation entries must be weight-1 monomials.
struct JobConfig {
  std::vector<std::string> variables;
  std::string polynomial;
  std::vector<std::string> deformation;
  std::vector<cplx> u_values;
  std::vector<std::vector<GQ>> u_exact;  // exact parameter points, when given as strings
  cplx grid_center = 0;
  double grid_radius = 1.0;
  int grid_count = 12;
  double tol_series = 1e-10;
  double tol_ode = 1e-10;
  double fd_step = 1e-2;
  double tol_verify = 1e-6;
  double tol_wp = 1e-4;
  double tol_forbidden = 1e-10;
  std::string out_path;       // empty = stdout
  std::string format = "json";
  double debug_perturb_constant = 0;  // negative-control knob for cmd_verify

  LGPotential build_potential(const std::vector<GQ>& u_exact = {}) const;
};

JobConfig parse_config(const ojson& j);
ojson load_json_file(const std::string& path);

std::string fmt_double(double v);
std::string fmt_cplx(cplx v);
ojson json_cplx(cplx v);

ojson basis_json(const JacobiBasis& B, const std::vector<std::string>& vars);
ojson pf_json(const PicardFuchsODE& ode);
ojson ruan_json(const RuanReport& r);
ojson pairing_json(const PairingReport& r);
ojson fit_json(const FitReport& r);
ojson wp_json(const WPReport& r);

void write_periods_csv(std::ostream& os, const PeriodMatrix& PM);
void write_wp_csv(std::ostream& os, const WPReport& rep);

ojson error_json(const std::string& code, const std::string& message);

}  // namespace lgtt

#endif
