#ifndef LGTT_PERIODS_HPP
#define LGTT_PERIODS_HPP

#include <complex>
#include <string>

#include "lgtt/thimble.hpp"

namespace lgtt {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// integral over the ray arg z = theta_j of e^{±z^m} z^k dz, evaluated in
// closed form as a sector phase times Gamma((k+1)/m)/m. For the decaying
// integrand the rays are theta_j = 2 pi j / m   (negative exponent e^{-z^m})
//                         theta_j = (pi + 2 pi j)/m (positive exponent e^{+z^m}).
cplx gamma_ray_integral(int m, int k, int sector, bool negative_exponent);

// 1-d thimble C_j = ray_{j+1} - ray_j; j = 0 .. m-2
cplx thimble_1d_integral(int m, int k, int sector, bool negative_exponent);

// *(dz_1 ^ ... ^ dz_n) = eps_n dz_1 ^ ... ^ dz_n on flat C^n
cplx hodge_star_epsilon(int n);

// Period tables over the monodromy-adapted thimble basis. Row k is the
// adapted thimble, column a the Jacobi basis element:
//   minus[k][a] = int_{gamma_k^-} e^{F} phi_a dz
//   plus[k][a]  = int_{gamma_k^+} e^{-F} phi_a dz      (no Hodge-star factor)
struct PeriodMatrix {
  cplx u = 0;
  long rank = 0, mu = 0;
  int n_invariant = 0;
  std::vector<std::vector<cplx>> minus, plus;
  std::string method;
  double tol = 0;
};

// Fermat point: entries are pure Gamma products.
PeriodMatrix fermat_periods(const LGPotential& P, const JacobiBasis& B);

// Entire power series in u around the Fermat point; truncation certified by
// a Wendel-bound geometric tail. One-parameter families only.
PeriodMatrix series_periods(const LGPotential& P, const JacobiBasis& B, cplx u, double tol);

// term-wise d^k/du^k of the period tables (the series is entire on |u| < radius)
PeriodMatrix series_periods_derivative(const LGPotential& P, const JacobiBasis& B, cplx u,
                                       double tol, int du_order);

// raw product-basis tables (used by phase/charge tests)
std::vector<std::vector<cplx>> product_periods(const LGPotential& P, const JacobiBasis& B,
                                               cplx u, double tol, Side side);

struct ThimbleIndex {
  std::vector<int> sectors;  // one per variable
  Side side = Side::minus;
};

// Direct numeric check along the actual contours: n <= 2 for coupled
// potentials, any dimension for diagonal potentials at u = 0.
cplx quadrature_oracle(const LGPotential& P, const GPoly& phi, const ThimbleIndex& thimble,
                       double tol);

// raw overload for test potentials outside the marginal-deformation shape
// (for example sub-marginal couplings); f_diag must be diagonal Fermat type
cplx quadrature_oracle(const GPoly& f_diag, const GPoly& extra, const GPoly& phi,
                       const ThimbleIndex& thimble, double tol);

}  // namespace lgtt

#endif
