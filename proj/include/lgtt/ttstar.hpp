#ifndef LGTT_TTSTAR_HPP
#define LGTT_TTSTAR_HPP

#include <map>
#include <memory>

#include "lgtt/elliptic.hpp"
#include "lgtt/gaussmanin.hpp"
#include "lgtt/periods.hpp"
#include "lgtt/residue.hpp"

namespace lgtt {

std::vector<cplx> disc_grid(cplx center, double radius, int count);
std::vector<cplx> square_grid(cplx center, double half_side, int per_side);

struct IntersectionData {
  std::vector<std::vector<long>> I_cy;       // symplectic pairing on (delta_0, delta_1)
  std::vector<std::vector<long>> Icy_inv;
  std::vector<std::vector<cplx>> Iprime_inv; // inverse LG intersection, our thimble basis
};

IntersectionData intersection_cy_n3();

struct TTFrame {
  cplx u;
  double h00 = 0;
  std::vector<std::vector<cplx>> eta_prime;   // pairing values where computable
  std::vector<std::vector<char>> eta_known;
  double G_lg = 0, G_cy = 0;
  std::map<std::string, double> residuals;
};

struct RuanReport {
  std::vector<std::vector<long>> N;  // integer basis change, |det| = 1
  long det = 0;
  double fit_rounding = 0;   // distance of the LSQ solution from integers
  double max_residual = 0;   // over the grid, both basis columns
  bool pass = false;
};

struct PairingReport {
  double max_relative_residual = 0;  // nonzero pairs
  double max_forbidden = 0;          // charge-forbidden pairs, relative scale
  bool pass = false;
};

struct FitReport {
  std::vector<std::vector<cplx>> fitted;      // fitted inverse intersection
  std::vector<std::vector<cplx>> in_cy_basis; // N^-T . fitted . N^+ pulled back
  double entry_mismatch = 0;                  // vs 2 pi^2 Icy_inv, relative to 2 pi^2
  double fit_residual = 0;
  double half_grid_drift = 0;
  bool pass = false;
};

struct WPReport {
  std::vector<TTFrame> frames;
  double max_relative_difference = 0;  // G_lg vs G_cy
  double max_richardson_drift = 0;
  bool pass = false;
};

// Verification engine for the n = 3 Hesse family: calibrates the integer
// thimble/cycle matching once, then evaluates every identity from period
// data. The inverse intersection matrix is populated from the CY side and
// re-derived by fit_intersection_lg as a check.
class HesseVerifier {
public:
  // Optional integer unimodular twists of the invariant thimble bases let
  // tests exercise the basis-change invariance of every reported scalar.
  explicit HesseVerifier(const LGPotential& P, double series_tol = 1e-12,
                         std::vector<std::vector<long>> twist_minus = {},
                         std::vector<std::vector<long>> twist_plus = {});

  const LGPotential& potential() const { return P_; }
  const JacobiBasis& basis() const { return B_; }
  int orientation_sign() const { return sign_; }
  const std::vector<std::vector<long>>& n_minus() const { return Nm_; }
  const std::vector<std::vector<long>>& n_plus() const { return Np_; }
  const std::vector<std::vector<cplx>>& inverse_intersection() const { return Iprime_inv_; }

  // invariant-thimble period vectors for basis column a
  std::array<cplx, 2> lg_minus(cplx u, int a) const;
  std::array<cplx, 2> lg_plus_starred(cplx u, int a) const;  // eps_3 included

  EllipticPeriods cy(cplx u) const { return curve_.periods(u); }
  std::array<cplx, 2> cy_class_periods(cplx u, int a) const;          // periods of R_u(phi_a)
  std::array<cplx, 2> cy_class_periods_starred(cplx u, int a) const;  // periods of *R_u(phi_a)

  double vacuum_norm(cplx u) const;
  cplx eta_pair(cplx u, int a, int b) const;       // LG bilinear assembly
  cplx eta_expected(cplx u, int a, int b) const;   // residue route
  double wp_lg(cplx u, double step) const;
  double wp_cy(cplx u, double step) const;

  RuanReport verify_ruan(const std::vector<cplx>& grid, double tol,
                         double perturb_constant = 0) const;
  PairingReport verify_pairing_chain(const std::vector<cplx>& grid, double tol,
                                     double forbidden_tol) const;
  FitReport fit_intersection_lg(const std::vector<cplx>& grid, double tol) const;
  WPReport wp_equality(const std::vector<cplx>& grid, double step, double tol,
                       double drift_tol) const;

  TTFrame frame(cplx u, double step) const;

  int vacuum_index() const { return a0_; }
  int socle_prime_index() const { return as_; }

private:
  LGPotential P_;
  JacobiBasis B_;
  double tol_;
  HesseCurve curve_;
  RatFunc res_socle_;  // exact residue of phi_socle as a function of u
  int a0_ = 0, as_ = 0;
  int n0_ = 1, ns_ = 2;
  std::vector<std::vector<long>> twist_m_, twist_p_;
  std::vector<std::vector<long>> Nm_, Np_;
  double Nm_round_ = 0, Np_round_ = 0;
  int sign_ = 1;
  std::vector<std::vector<cplx>> Iprime_inv_;
  cplx eps3_;

  void calibrate();
  std::array<cplx, 2> nvec_apply(const std::vector<std::vector<long>>& N,
                                 const std::array<cplx, 2>& v) const;
};

cplx ruan_constant_minus(int n_a);  // 2 pi i (-1)^{n_a - 1} (n_a - 1)!
cplx ruan_constant_plus(int n_a);   // 2 pi i (-1)^{n_a} (n_a - 1)!

// Translation between the cup product of residue classes and the normalized
// Grothendieck residue symbol:
//   int_X res(Omega_phi) ^ res(Omega_psi) = kappa_n c~_{ab} res(phi psi).
// With our orientation conventions (res = (1/2 pi i) tube, symplectic cycle
// basis with Im tau > 0) the n = 3 cross-check pins kappa_n = -2 pi i n; the
// period-correspondence and vacuum-norm identities hold with no extra
// constant, so the factor sits entirely in this classical translation.
cplx cy_cup_residue_constant(int n);

}  // namespace lgtt

#endif
