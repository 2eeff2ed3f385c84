#include "lgtt/odeflow.hpp"

#include <cmath>

namespace lgtt {

namespace {

// companion right-hand side of p_r y^(r) + ... + p_0 y = 0
struct Companion {
  const PicardFuchsODE& ode;
  int r;

  std::vector<cplx> operator()(cplx u, const std::vector<cplx>& y) const {
    std::vector<cplx> dy(r);
    for (int i = 0; i + 1 < r; ++i) dy[i] = y[i + 1];
    cplx lead = ode.coeffs[r].eval(u);
    cplx top = 0;
    for (int j = 0; j < r; ++j) top -= ode.coeffs[j].eval(u) * y[j];
    dy[r - 1] = top / lead;
    return dy;
  }
};

double seg_point_distance(cplx a, cplx b, cplx p) {
  cplx d = b - a;
  double L2 = std::norm(d);
  if (L2 == 0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(d)).real() / L2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// Dormand-Prince 5(4) step
template <class F>
std::vector<cplx> dopri_step(const F& f, cplx u, const std::vector<cplx>& y, cplx h,
                             double& err) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  auto axpy = [&](const std::vector<cplx>& base, std::initializer_list<std::pair<double, const std::vector<cplx>*>> terms) {
    std::vector<cplx> r = base;
    for (auto& [a, v] : terms)
      for (size_t i = 0; i < r.size(); ++i) r[i] += h * a * (*v)[i];
    return r;
  };
  auto k1 = f(u, y);
  auto k2 = f(u + c2 * h, axpy(y, {{1.0 / 5, &k1}}));
  auto k3 = f(u + c3 * h, axpy(y, {{3.0 / 40, &k1}, {9.0 / 40, &k2}}));
  auto k4 = f(u + c4 * h, axpy(y, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}}));
  auto k5 = f(u + c5 * h, axpy(y, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2}, {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}}));
  auto k6 = f(u + h, axpy(y, {{9017.0 / 3168, &k1}, {-355.0 / 33, &k2}, {46732.0 / 5247, &k3}, {49.0 / 176, &k4}, {-5103.0 / 18656, &k5}}));
  std::vector<cplx> y5 = axpy(y, {{35.0 / 384, &k1}, {500.0 / 1113, &k3}, {125.0 / 192, &k4}, {-2187.0 / 6784, &k5}, {11.0 / 84, &k6}});
  auto k7 = f(u + h, y5);
  std::vector<cplx> y4 = axpy(y, {{5179.0 / 57600, &k1}, {7571.0 / 16695, &k3}, {393.0 / 640, &k4}, {-92097.0 / 339200, &k5}, {187.0 / 2100, &k6}, {1.0 / 40, &k7}});
  err = 0;
  double scale = 1e-30;
  for (size_t i = 0; i < y.size(); ++i) {
    err = std::max(err, std::abs(y5[i] - y4[i]));
    scale = std::max(scale, std::abs(y5[i]));
  }
  err /= scale;
  return y5;
}

}  // namespace

std::vector<cplx> ode_continue(const PicardFuchsODE& ode, cplx u0, std::vector<cplx> y0,
                               const std::vector<cplx>& path, const OdeOptions& opt) {
  int r = ode.order;
  if (static_cast<int>(y0.size()) != r)
    throw std::domain_error("ode_continue: initial data must have `order` components");
  Companion f{ode, r};

  cplx u = u0;
  std::vector<cplx> y = std::move(y0);
  for (cplx target : path) {
    for (const cplx& s : ode.singular_points)
      if (seg_point_distance(u, target, s) < opt.margin)
        throw NumericError("ode_continue: path passes within the singular-point margin");
    cplx dir = target - u;
    double length = std::abs(dir);
    if (length == 0) continue;
    dir /= length;
    double done = 0, h = std::min(0.1, length);
    while (done < length) {
      h = std::min(h, length - done);
      double err;
      auto ynew = dopri_step(f, u + done * dir, y, h * dir, err);
      if (err <= opt.tol) {
        done += h;
        y = std::move(ynew);
        h *= std::min(2.0, 0.9 * std::pow(opt.tol / std::max(err, 1e-300), 0.2));
      } else {
        h *= std::max(0.2, 0.9 * std::pow(opt.tol / err, 0.2));
      }
      if (h < opt.h_min) throw NumericError("ode_continue: step size underflow");
    }
    u = target;
  }
  return y;
}

std::vector<std::vector<cplx>> monodromy_loop(const PicardFuchsODE& ode, cplx center,
                                              double radius, int segments,
                                              const OdeOptions& opt) {
  int r = ode.order;
  cplx base = center + radius;
  std::vector<cplx> loop;
  for (int k = 1; k <= segments; ++k) {
    double th = 2.0 * M_PI * k / segments;
    loop.push_back(center + radius * cplx(std::cos(th), std::sin(th)));
  }
  std::vector<std::vector<cplx>> M(r, std::vector<cplx>(r));
  for (int col = 0; col < r; ++col) {
    std::vector<cplx> e(r, cplx(0));
    e[col] = 1;
    auto out = ode_continue(ode, base, e, loop, opt);
    for (int row = 0; row < r; ++row) M[row][col] = out[row];
  }
  return M;
}

cplx mat2_det(const std::vector<std::vector<cplx>>& M) {
  if (M.size() != 2) throw std::domain_error("mat2_det: 2x2 only");
  return M[0][0] * M[1][1] - M[0][1] * M[1][0];
}

cplx mat_trace(const std::vector<std::vector<cplx>>& M) {
  cplx t = 0;
  for (size_t i = 0; i < M.size(); ++i) t += M[i][i];
  return t;
}

}  // namespace lgtt
