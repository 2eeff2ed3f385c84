#ifndef LGTT_ODEFLOW_HPP
#define LGTT_ODEFLOW_HPP

#include "lgtt/gaussmanin.hpp"
#include "lgtt/periods.hpp"

namespace lgtt {

// Analytic continuation of solutions of a Picard-Fuchs operator along a
// polyline in the u-plane. State vector: (y, y', ..., y^{(r-1)}).
struct OdeOptions {
  double tol = 1e-10;
  double margin = 0.15;  // minimum distance to any singular point
  double h_min = 1e-10;
};

std::vector<cplx> ode_continue(const PicardFuchsODE& ode, cplx u0, std::vector<cplx> y0,
                               const std::vector<cplx>& path, const OdeOptions& opt = {});

// fundamental-system transport around a circle; returns the r x r monodromy
// in the (y, y', ...) frame at the basepoint center + radius
std::vector<std::vector<cplx>> monodromy_loop(const PicardFuchsODE& ode, cplx center,
                                              double radius, int segments = 24,
                                              const OdeOptions& opt = {});

cplx mat2_det(const std::vector<std::vector<cplx>>& M);
cplx mat_trace(const std::vector<std::vector<cplx>>& M);

}  // namespace lgtt

#endif
