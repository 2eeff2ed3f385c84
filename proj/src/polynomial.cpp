#include "lgtt/polynomial.hpp"

#include <algorithm>

namespace lgtt {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // depth-first enumeration, then canonical sort
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == nvars - 1) {
      cur.e[var] = static_cast<uint16_t>(rest);
      out.push_back(cur);
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur.e[var] = static_cast<uint16_t>(k);
      rec(var + 1, rest - k);
    }
  };
  if (degree < 0) return out;
  rec(0, degree);
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string poly_str(const GPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  // highest degree first; within a degree keep the canonical z1-heavy order
  std::vector<std::pair<Monomial, GQ>> ordered(p.terms().begin(), p.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.deg() > b.first.deg(); });
  std::string s;
  for (auto& [m, c] : ordered) {
    std::string cs = c.str();
    bool negated = false;
    bool single_component = c.re.is_zero() || c.im.is_zero();
    if (!s.empty()) {
      if (cs[0] == '-' && single_component) {
        s += " - ";
        cs = cs.substr(1);
        negated = true;
      } else {
        s += " + ";
      }
    }
    bool needs_paren = !c.is_real() && !c.re.is_zero();
    if (m.is_one()) {
      s += needs_paren ? "(" + cs + ")" : cs;
    } else if (!negated && c == GQ(1)) {
      s += m.str(vars);
    } else if (!negated && c == GQ(-1)) {
      s += "-" + m.str(vars);
    } else if (negated && cs == "1") {
      s += m.str(vars);
    } else {
      s += (needs_paren ? "(" + cs + ")" : cs) + "*" + m.str(vars);
    }
  }
  return s;
}

cplx eval_poly(const GPoly& p, const std::vector<cplx>& z) {
  cplx acc = 0;
  for (auto& [m, c] : p.terms()) {
    cplx t = c.to_complex();
    for (int i = 0; i < m.nvars(); ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= z[i];
    acc += t;
  }
  return acc;
}

}  // namespace lgtt
