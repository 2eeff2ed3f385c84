#ifndef LGTT_WEIGHTS_HPP
#define LGTT_WEIGHTS_HPP

#include <stdexcept>
#include <vector>

#include "lgtt/polynomial.hpp"

namespace lgtt {

struct WeightError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational weights q_i with common period d and integer weights Q_i = q_i*d.
struct WeightSystem {
  std::vector<Rat> q;
  long d = 0;
  std::vector<long> Q;

  int nvars() const { return static_cast<int>(q.size()); }

  long wdeg(const Monomial& m) const {  // integer weighted degree, scale d
    long w = 0;
    for (int i = 0; i < m.nvars(); ++i) w += static_cast<long>(m.e[i]) * Q[i];
    return w;
  }
  Rat weight(const Monomial& m) const { return Rat(wdeg(m), d); }

  bool is_homogeneous_case() const {  // all q_i = 1/n with n variables
    for (auto& qi : q)
      if (qi != Rat(1, nvars())) return false;
    return true;
  }

  // socle weighted degree sum_i (d - 2 Q_i), integer scale
  long socle_wdeg() const {
    long s = 0;
    for (long Qi : Q) s += d - 2 * Qi;
    return s;
  }
};

// Solve f(lambda^{q_1} z_1, ...) = lambda f for the q_i.
WeightSystem infer_weights(const GPoly& f);

WeightSystem weights_from(const std::vector<Rat>& q);

// hat c = sum_i (1 - 2 q_i)
Rat central_charge(const WeightSystem& w);

}  // namespace lgtt

#endif
