#include "lgtt/ttstar.hpp"

#include <cmath>

namespace lgtt {

namespace {

constexpr double kGolden = 0.6180339887498949;

std::vector<std::vector<cplx>> mat2_from(double a00, double a01, double a10, double a11) {
  return {{cplx(a00), cplx(a01)}, {cplx(a10), cplx(a11)}};
}

// real least squares via normal equations, tiny systems
std::vector<double> lsq_real(const std::vector<std::vector<double>>& A,
                             const std::vector<double>& b) {
  size_t n = A[0].size();
  std::vector<std::vector<double>> M(n, std::vector<double>(n + 1, 0.0));
  for (size_t r = 0; r < A.size(); ++r) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) M[i][j] += A[r][i] * A[r][j];
      M[i][n] += A[r][i] * b[r];
    }
  }
  double scale = 0;
  for (size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(M[i][i]));
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    for (size_t r = c + 1; r < n; ++r)
      if (std::abs(M[r][c]) > std::abs(M[p][c])) p = r;
    std::swap(M[c], M[p]);
    if (std::abs(M[c][c]) < 1e-12 * scale)
      throw NumericError("least squares: ill-conditioned normal equations");
    for (size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c] == 0) continue;
      double f = M[r][c] / M[c][c];
      for (size_t j = c; j <= n; ++j) M[r][j] -= f * M[c][j];
    }
  }
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
  return x;
}

std::vector<cplx> lsq_complex(const std::vector<std::vector<cplx>>& A,
                              const std::vector<cplx>& b) {
  size_t n = A[0].size();
  std::vector<std::vector<cplx>> M(n, std::vector<cplx>(n + 1, cplx(0)));
  for (size_t r = 0; r < A.size(); ++r) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) M[i][j] += std::conj(A[r][i]) * A[r][j];
      M[i][n] += std::conj(A[r][i]) * b[r];
    }
  }
  double scale = 0;
  for (size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(M[i][i]));
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    for (size_t r = c + 1; r < n; ++r)
      if (std::abs(M[r][c]) > std::abs(M[p][c])) p = r;
    std::swap(M[c], M[p]);
    if (std::abs(M[c][c]) < 1e-12 * scale)
      throw NumericError("least squares: ill-conditioned normal equations");
    for (size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c] == cplx(0)) continue;
      cplx f = M[r][c] / M[c][c];
      for (size_t j = c; j <= n; ++j) M[r][j] -= f * M[c][j];
    }
  }
  std::vector<cplx> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
  return x;
}

std::vector<std::vector<cplx>> inv2(const std::vector<std::vector<cplx>>& M) {
  cplx det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  if (std::abs(det) == 0) throw NumericError("2x2 inverse: singular matrix");
  return {{M[1][1] / det, -M[0][1] / det}, {-M[1][0] / det, M[0][0] / det}};
}

std::vector<std::vector<cplx>> to_cplx(const std::vector<std::vector<long>>& M) {
  std::vector<std::vector<cplx>> R(M.size(), std::vector<cplx>(M[0].size()));
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < M[0].size(); ++j) R[i][j] = cplx(static_cast<double>(M[i][j]));
  return R;
}

}  // namespace

std::vector<cplx> disc_grid(cplx center, double radius, int count) {
  std::vector<cplx> g;
  for (int j = 0; j < count; ++j) {
    double r = radius * std::sqrt((j + 1.0) / count);
    double th = 2.0 * M_PI * kGolden * j;
    g.push_back(center + r * cplx(std::cos(th), std::sin(th)));
  }
  return g;
}

std::vector<cplx> square_grid(cplx center, double half_side, int per_side) {
  std::vector<cplx> g;
  for (int iy = 0; iy < per_side; ++iy)
    for (int ix = 0; ix < per_side; ++ix) {
      double fx = per_side == 1 ? 0.0 : -1.0 + 2.0 * ix / (per_side - 1);
      double fy = per_side == 1 ? 0.0 : -1.0 + 2.0 * iy / (per_side - 1);
      g.push_back(center + half_side * cplx(fx, fy));
    }
  return g;
}

IntersectionData intersection_cy_n3() {
  IntersectionData D;
  D.I_cy = {{0, 1}, {-1, 0}};
  D.Icy_inv = {{0, -1}, {1, 0}};
  return D;
}

cplx ruan_constant_minus(int n_a) {
  double fact = 1;
  for (int j = 2; j < n_a; ++j) fact *= j;
  double sgn = (n_a - 1) % 2 ? -1.0 : 1.0;
  return cplx(0, 2.0 * M_PI) * sgn * fact;
}

cplx ruan_constant_plus(int n_a) { return -ruan_constant_minus(n_a); }

cplx cy_cup_residue_constant(int n) { return cplx(0, -2.0 * M_PI * n); }

// ------------------------------------------------------------ HesseVerifier

HesseVerifier::HesseVerifier(const LGPotential& P, double series_tol,
                             std::vector<std::vector<long>> twist_minus,
                             std::vector<std::vector<long>> twist_plus)
    : P_(P), tol_(series_tol),
      twist_m_(twist_minus.empty() ? std::vector<std::vector<long>>{{1, 0}, {0, 1}}
                                   : std::move(twist_minus)),
      twist_p_(twist_plus.empty() ? std::vector<std::vector<long>>{{1, 0}, {0, 1}}
                                  : std::move(twist_plus)),
      eps3_(hodge_star_epsilon(3)) {
  if (P_.nvars() != 3 || diagonal_exponents(P_.f) != std::vector<int>{3, 3, 3} ||
      P_.s() != 1 || !(P_.marginals[0] == Monomial{1, 1, 1}))
    throw std::domain_error("HesseVerifier: expects the Hesse family z1^3+z2^3+z3^3 + u z1z2z3");
  auto check_unimodular = [](const std::vector<std::vector<long>>& U) {
    if (U.size() != 2 || U[0].size() != 2 || U[1].size() != 2 ||
        std::labs(U[0][0] * U[1][1] - U[0][1] * U[1][0]) != 1)
      throw std::domain_error("HesseVerifier: basis twist must be 2x2 unimodular");
  };
  check_unimodular(twist_m_);
  check_unimodular(twist_p_);
  LGPotential base(P_.f, P_.w, P_.marginals, {GQ(0)});
  B_ = compute_basis(base);
  if (B_.mu_prime != 2)
    throw std::runtime_error("HesseVerifier: expected a two-dimensional small sector");
  a0_ = B_.prime_indices[0];
  as_ = B_.prime_indices[1];
  n0_ = static_cast<int>(B_.charges[a0_] / 3);
  ns_ = static_cast<int>(B_.charges[as_] / 3);

  // exact residue of the socle class as a rational function of u
  PotentialT<RatFunc> Psym(
      [&] {
        Poly<RatFunc> f(3);
        for (auto& [m, c] : P_.f.terms()) f.add_term(m, RatFunc(c));
        return f;
      }(),
      P_.w, P_.marginals, {RatFunc::var()});
  JacobiRing<RatFunc> ring(Psym);
  const auto& SB = ring.basis();
  Poly<RatFunc> socle_poly(SB.monomials[SB.socle_index], RatFunc(1));
  RatFunc c_g = ring.normal_form(socle_poly).coeff(SB.monomials[SB.socle_index]);
  res_socle_ = RatFunc(GQ(Rat(SB.mu))) * c_g / SB.hessian_socle_coeff;

  calibrate();
}

std::array<cplx, 2> HesseVerifier::lg_minus(cplx u, int a) const {
  static thread_local std::map<std::pair<double, double>, PeriodMatrix> cache;
  auto key = std::make_pair(u.real(), u.imag());
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 4096) cache.clear();
    it = cache.emplace(key, series_periods(P_, B_, u, tol_)).first;
  }
  return nvec_apply(twist_m_, {it->second.minus[0][a], it->second.minus[1][a]});
}

std::array<cplx, 2> HesseVerifier::lg_plus_starred(cplx u, int a) const {
  static thread_local std::map<std::pair<double, double>, PeriodMatrix> cache;
  auto key = std::make_pair(u.real(), u.imag());
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 4096) cache.clear();
    it = cache.emplace(key, series_periods(P_, B_, u, tol_)).first;
  }
  return nvec_apply(twist_p_, {eps3_ * it->second.plus[0][a], eps3_ * it->second.plus[1][a]});
}

std::array<cplx, 2> HesseVerifier::cy_class_periods(cplx u, int a) const {
  if (a == a0_) {
    EllipticPeriods E = curve_.periods(u);
    return {E.Pi0, E.Pi1};
  }
  if (a == as_) {
    auto d = curve_.period_derivative(u, 1);
    return {-d[0], -d[1]};  // R_u(phi_s) = -d/du of the vacuum class
  }
  throw std::domain_error("cy_class_periods: index outside the small sector");
}

std::array<cplx, 2> HesseVerifier::cy_class_periods_starred(cplx u, int a) const {
  EllipticPeriods E = curve_.periods(u);
  if (a == a0_) return {cplx(0, -1) * E.Pi0, cplx(0, -1) * E.Pi1};
  auto alpha = cy_class_periods(u, a);
  // Hodge decomposition alpha = c_hol * omega + c_anti * conj(omega)
  cplx det = E.Pi0 * std::conj(E.Pi1) - E.Pi1 * std::conj(E.Pi0);
  cplx c_hol = (alpha[0] * std::conj(E.Pi1) - alpha[1] * std::conj(E.Pi0)) / det;
  cplx c_anti = (E.Pi0 * alpha[1] - E.Pi1 * alpha[0]) / det;
  // *(1,0) = -i, *(0,1) = +i on the curve
  return {cplx(0, -1) * c_hol * E.Pi0 + cplx(0, 1) * c_anti * std::conj(E.Pi0),
          cplx(0, -1) * c_hol * E.Pi1 + cplx(0, 1) * c_anti * std::conj(E.Pi1)};
}

std::array<cplx, 2> HesseVerifier::nvec_apply(const std::vector<std::vector<long>>& N,
                                              const std::array<cplx, 2>& v) const {
  return {static_cast<double>(N[0][0]) * v[0] + static_cast<double>(N[0][1]) * v[1],
          static_cast<double>(N[1][0]) * v[0] + static_cast<double>(N[1][1]) * v[1]};
}

void HesseVerifier::calibrate() {
  const std::vector<cplx> refs = {cplx(0.31, 0.22), cplx(-0.17, 0.29)};

  auto fit_integer = [&](bool plus_side, double& rounding) {
    // per adapted thimble row k, solve B_k = C sum_l N_{kl} Pi_l in LSQ sense
    std::vector<std::vector<long>> N(2, std::vector<long>(2, 0));
    rounding = 0;
    for (int k = 0; k < 2; ++k) {
      std::vector<std::vector<double>> A;
      std::vector<double> b;
      for (cplx u : refs) {
        for (int which = 0; which < 2; ++which) {
          int a = which == 0 ? a0_ : as_;
          int na = which == 0 ? n0_ : ns_;
          cplx C = plus_side ? ruan_constant_plus(na) : ruan_constant_minus(na);
          auto Pi = plus_side ? cy_class_periods_starred(u, a) : cy_class_periods(u, a);
          auto B = plus_side ? lg_plus_starred(u, a) : lg_minus(u, a);
          // complex equation N_k0 r0 + N_k1 r1 = B_k, split into re/im rows
          cplx r0 = C * Pi[0], r1 = C * Pi[1];
          A.push_back({r0.real(), r1.real()});
          b.push_back(B[k].real());
          A.push_back({r0.imag(), r1.imag()});
          b.push_back(B[k].imag());
        }
      }
      auto x = lsq_real(A, b);
      for (int l = 0; l < 2; ++l) {
        double v = x[l];
        long r = std::lround(v);
        rounding = std::max(rounding, std::abs(v - r));
        N[k][l] = r;
      }
    }
    return N;
  };

  Nm_ = fit_integer(false, Nm_round_);
  Np_ = fit_integer(true, Np_round_);
  if (Nm_round_ > 0.05 || Np_round_ > 0.05)
    throw NumericError("calibration: no integer thimble/cycle matching within tolerance");
  long detm = Nm_[0][0] * Nm_[1][1] - Nm_[0][1] * Nm_[1][0];
  long detp = Np_[0][0] * Np_[1][1] - Np_[0][1] * Np_[1][0];
  if (std::labs(detm) != 1 || std::labs(detp) != 1)
    throw NumericError("calibration: thimble/cycle matching is not unimodular");

  // inverse intersection in our bases: 2 pi^2 (N^-)^{-T} Icy^{-1} (N^+)^{-1}
  auto J = mat2_from(0, -1, 1, 0);
  auto NmT_inv = inv2({{cplx((double)Nm_[0][0]), cplx((double)Nm_[1][0])},
                       {cplx((double)Nm_[0][1]), cplx((double)Nm_[1][1])}});
  auto Np_inv = inv2(to_cplx(Np_));
  double scale = 2.0 * M_PI * M_PI;
  Iprime_inv_.assign(2, std::vector<cplx>(2, cplx(0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          Iprime_inv_[i][j] += scale * NmT_inv[i][k] * J[k][l] * Np_inv[l][j];

  // orientation arbitration: the vacuum norm must come out real positive
  cplx h = 0;
  auto Bm = lg_minus(refs[0], a0_);
  auto Bp = lg_plus_starred(refs[0], a0_);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) h += Bm[k] * Iprime_inv_[k][l] * std::conj(Bp[l]);
  if (std::abs(h.imag()) > 1e-6 * std::abs(h))
    throw NumericError("calibration: vacuum norm is not real");
  if (h.real() < 0) {
    sign_ = -1;
    for (auto& row : Iprime_inv_)
      for (auto& v : row) v = -v;
  }
}

double HesseVerifier::vacuum_norm(cplx u) const {
  auto Bm = lg_minus(u, a0_);
  auto Bp = lg_plus_starred(u, a0_);
  cplx h = 0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) h += Bm[k] * Iprime_inv_[k][l] * std::conj(Bp[l]);
  if (std::abs(h.imag()) > 1e-8 * std::abs(h))
    throw NumericError("vacuum norm acquired an imaginary part beyond tolerance");
  if (h.real() <= 0) throw NumericError("vacuum norm is not positive");
  return h.real();
}

cplx HesseVerifier::eta_pair(cplx u, int a, int b) const {
  auto Bm = lg_minus(u, a);
  auto Bp = lg_plus_starred(u, b);
  cplx v = 0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) v += Bm[k] * Iprime_inv_[k][l] * Bp[l];
  return v;
}

cplx HesseVerifier::eta_expected(cplx u, int a, int b) const {
  if (a == a0_ && b == a0_) return 0;
  cplx res = res_socle_.eval(u);
  double two_pi2 = 2.0 * M_PI * M_PI;
  cplx kappa = cy_cup_residue_constant(3);
  if (a == a0_ && b == as_) {
    cplx star(0, 1);  // * acts on the higher-pole (0,1) component
    return two_pi2 * ruan_constant_minus(n0_) * ruan_constant_minus(ns_) * star * kappa *
           carlson_c_tilde(n0_, ns_, 3).to_complex() * res;
  }
  if (a == as_ && b == a0_) {
    cplx star(0, -1);  // * acts on the holomorphic form itself
    return two_pi2 * ruan_constant_minus(ns_) * ruan_constant_minus(n0_) * star * kappa *
           carlson_c_tilde(ns_, n0_, 3).to_complex() * res;
  }
  throw std::domain_error("eta_expected: pair requires T-matrix entries outside vacuum rows");
}

double HesseVerifier::wp_lg(cplx u, double step) const {
  auto L = [&](cplx v) { return std::log(vacuum_norm(v)); };
  double lap = (L(u + step) + L(u - step) + L(u + cplx(0, step)) + L(u - cplx(0, step)) -
                4.0 * L(u)) /
               (step * step);
  return -0.25 * lap;
}

double HesseVerifier::wp_cy(cplx u, double step) const {
  auto L = [&](cplx v) {
    EllipticPeriods E = curve_.periods(v);
    double e = E.tau.imag() * std::norm(E.Pi0);
    if (e <= 0) throw NumericError("cy Hodge norm is not positive");
    return std::log(e);
  };
  double lap = (L(u + step) + L(u - step) + L(u + cplx(0, step)) + L(u - cplx(0, step)) -
                4.0 * L(u)) /
               (step * step);
  return -0.25 * lap;
}

RuanReport HesseVerifier::verify_ruan(const std::vector<cplx>& grid, double tol,
                                      double perturb_constant) const {
  RuanReport rep;
  rep.N = Nm_;
  rep.det = Nm_[0][0] * Nm_[1][1] - Nm_[0][1] * Nm_[1][0];
  rep.fit_rounding = Nm_round_;
  for (cplx u : grid) {
    for (int which = 0; which < 2; ++which) {
      int a = which == 0 ? a0_ : as_;
      int na = which == 0 ? n0_ : ns_;
      cplx C = ruan_constant_minus(na) * (1.0 + perturb_constant);
      auto lhs = lg_minus(u, a);
      auto rhs = nvec_apply(Nm_, cy_class_periods(u, a));
      double num = 0, den = 0;
      for (int k = 0; k < 2; ++k) {
        num += std::norm(lhs[k] - C * rhs[k]);
        den += std::norm(lhs[k]);
      }
      rep.max_residual = std::max(rep.max_residual, std::sqrt(num / den));
    }
  }
  rep.pass = rep.max_residual < tol && std::labs(rep.det) == 1;
  return rep;
}

PairingReport HesseVerifier::verify_pairing_chain(const std::vector<cplx>& grid, double tol,
                                                  double forbidden_tol) const {
  PairingReport rep;
  for (cplx u : grid) {
    cplx p0s = eta_pair(u, a0_, as_), e0s = eta_expected(u, a0_, as_);
    cplx ps0 = eta_pair(u, as_, a0_), es0 = eta_expected(u, as_, a0_);
    cplx p00 = eta_pair(u, a0_, a0_);
    double scale = std::max(std::abs(e0s), std::abs(es0));
    rep.max_relative_residual = std::max(
        {rep.max_relative_residual, std::abs(p0s - e0s) / std::abs(e0s),
         std::abs(ps0 - es0) / std::abs(es0)});
    rep.max_forbidden = std::max(rep.max_forbidden, std::abs(p00) / scale);
  }
  rep.pass = rep.max_relative_residual < tol && rep.max_forbidden < forbidden_tol;
  return rep;
}

FitReport HesseVerifier::fit_intersection_lg(const std::vector<cplx>& grid, double tol) const {
  auto fit_on = [&](const std::vector<cplx>& pts) {
    std::vector<std::vector<cplx>> A;
    std::vector<cplx> b;
    for (cplx u : pts) {
      auto Bm0 = lg_minus(u, a0_), Bms = lg_minus(u, as_);
      auto Bp0 = lg_plus_starred(u, a0_), Bps = lg_plus_starred(u, as_);
      auto push = [&](const std::array<cplx, 2>& L, const std::array<cplx, 2>& R, cplx rhs) {
        A.push_back({L[0] * R[0], L[0] * R[1], L[1] * R[0], L[1] * R[1]});
        b.push_back(rhs);
      };
      push(Bm0, Bp0, 0);
      push(Bm0, Bps, eta_expected(u, a0_, as_));
      push(Bms, Bp0, eta_expected(u, as_, a0_));
    }
    auto x = lsq_complex(A, b);
    double resid = 0, scale = 0;
    for (size_t r = 0; r < A.size(); ++r) {
      cplx acc = -b[r];
      for (int j = 0; j < 4; ++j) acc += A[r][j] * x[j];
      resid = std::max(resid, std::abs(acc));
      scale = std::max(scale, std::abs(b[r]));
    }
    return std::make_pair(std::vector<std::vector<cplx>>{{x[0], x[1]}, {x[2], x[3]}},
                          resid / scale);
  };

  FitReport rep;
  auto [X, resid] = fit_on(grid);
  rep.fitted = X;
  rep.fit_residual = resid;

  std::vector<cplx> half;
  for (size_t i = 0; i < grid.size(); i += 2) half.push_back(grid[i]);
  auto [Xh, resid_h] = fit_on(half);
  double scale = 2.0 * M_PI * M_PI;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      rep.half_grid_drift =
          std::max(rep.half_grid_drift, std::abs(X[i][j] - Xh[i][j]) / scale);

  // pull the fit back through the calibrated integer matchings
  rep.in_cy_basis.assign(2, std::vector<cplx>(2, cplx(0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          rep.in_cy_basis[i][j] +=
              static_cast<double>(Nm_[k][i]) * X[k][l] * static_cast<double>(Np_[l][j]);
  auto D = intersection_cy_n3();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx target = scale * static_cast<double>(sign_) * static_cast<double>(D.Icy_inv[i][j]);
      rep.entry_mismatch =
          std::max(rep.entry_mismatch, std::abs(rep.in_cy_basis[i][j] - target) / scale);
    }
  rep.pass = rep.entry_mismatch < tol;
  return rep;
}

WPReport HesseVerifier::wp_equality(const std::vector<cplx>& grid, double step, double tol,
                                    double drift_tol) const {
  WPReport rep;
  for (cplx u : grid) {
    TTFrame f = frame(u, step);
    rep.max_relative_difference =
        std::max(rep.max_relative_difference, f.residuals.at("wp_equality"));
    rep.max_richardson_drift =
        std::max(rep.max_richardson_drift, f.residuals.at("richardson_drift"));
    rep.frames.push_back(std::move(f));
  }
  rep.pass = rep.max_relative_difference < tol && rep.max_richardson_drift < drift_tol;
  return rep;
}

TTFrame HesseVerifier::frame(cplx u, double step) const {
  TTFrame f;
  f.u = u;
  f.h00 = vacuum_norm(u);
  f.eta_prime.assign(2, std::vector<cplx>(2, cplx(0)));
  f.eta_known.assign(2, std::vector<char>(2, 1));
  f.eta_prime[0][0] = eta_pair(u, a0_, a0_);
  f.eta_prime[0][1] = eta_pair(u, a0_, as_);
  f.eta_prime[1][0] = eta_pair(u, as_, a0_);
  f.eta_known[1][1] = 0;  // needs T-matrix entries beyond the vacuum row

  double g1 = wp_lg(u, step), g2 = wp_lg(u, step / 2);
  double c1 = wp_cy(u, step), c2 = wp_cy(u, step / 2);
  f.G_lg = (4.0 * g2 - g1) / 3.0;
  f.G_cy = (4.0 * c2 - c1) / 3.0;
  f.residuals["richardson_drift"] =
      std::max(std::abs(g2 - g1), std::abs(c2 - c1)) / std::max(std::abs(f.G_lg), 1e-300);
  f.residuals["wp_equality"] = std::abs(f.G_lg - f.G_cy) / std::abs(f.G_cy);
  f.residuals["pairing"] =
      std::abs(eta_pair(u, a0_, as_) - eta_expected(u, a0_, as_)) /
      std::abs(eta_expected(u, a0_, as_));
  return f;
}

}  // namespace lgtt
