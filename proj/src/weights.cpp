#include "lgtt/weights.hpp"

namespace lgtt {

namespace {

// Exact Gaussian elimination for A q = 1 over the rationals.
// Rows are exponent vectors of f's monomials.
std::vector<Rat> solve_weight_system(std::vector<std::vector<Rat>> rows, int n) {
  std::vector<std::vector<Rat>> aug;
  for (auto& r : rows) {
    r.push_back(Rat(1));
    aug.push_back(r);
  }
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < aug.size(); ++col) {
    size_t sel = rank;
    while (sel < aug.size() && aug[sel][col].is_zero()) ++sel;
    if (sel == aug.size()) continue;
    std::swap(aug[rank], aug[sel]);
    Rat inv = Rat(1) / aug[rank][col];
    for (int j = col; j <= n; ++j) aug[rank][j] *= inv;
    for (size_t r = 0; r < aug.size(); ++r) {
      if (r == rank || aug[r][col].is_zero()) continue;
      Rat factor = aug[r][col];
      for (int j = col; j <= n; ++j) aug[r][j] -= factor * aug[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // rows below rank must be 0 = 0, otherwise inconsistent
  for (size_t r = rank; r < aug.size(); ++r)
    if (!aug[r][n].is_zero())
      throw WeightError("polynomial is not quasi-homogeneous (inconsistent weight system)");
  if (rank < static_cast<size_t>(n))
    throw WeightError("weight system underdetermined (a variable is missing from every pinning monomial)");
  std::vector<Rat> q(n);
  for (size_t r = 0; r < rank; ++r) q[pivot_col[r]] = aug[r][n];
  return q;
}

}  // namespace

WeightSystem weights_from(const std::vector<Rat>& q) {
  WeightSystem w;
  w.q = q;
  Rat l(1);
  for (auto& qi : q) {
    if (qi.sign() <= 0 || qi > Rat(1, 2))
      throw WeightError("weight out of range (0, 1/2]: " + qi.str());
    l = lcm(l, Rat(mpq_class(qi.raw().get_den())));
  }
  w.d = l.num_long();
  for (auto& qi : q) {
    Rat Qi = qi * Rat(w.d);
    if (!Qi.is_integer()) throw WeightError("internal: Q_i not integral");
    w.Q.push_back(Qi.num_long());
  }
  return w;
}

WeightSystem infer_weights(const GPoly& f) {
  if (f.is_zero()) throw WeightError("zero polynomial has no weight system");
  int n = f.nvars();
  std::vector<std::vector<Rat>> rows;
  for (auto& [m, c] : f.terms()) {
    std::vector<Rat> row(n);
    for (int i = 0; i < n; ++i) row[i] = Rat(static_cast<long>(m.e[i]));
    rows.push_back(std::move(row));
  }
  std::vector<Rat> q = solve_weight_system(std::move(rows), n);
  WeightSystem w = weights_from(q);
  // verify: every monomial of f must have total weight exactly 1
  for (auto& [m, c] : f.terms())
    if (w.wdeg(m) != w.d)
      throw WeightError("internal: inferred weights do not normalize f");
  return w;
}

Rat central_charge(const WeightSystem& w) {
  Rat c(0);
  for (auto& qi : w.q) c += Rat(1) - Rat(2) * qi;
  return c;
}

}  // namespace lgtt
