#ifndef LGTT_POLYNOMIAL_HPP
#define LGTT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "lgtt/monomial.hpp"
#include "lgtt/rational.hpp"

namespace lgtt {

// Multivariate polynomial over an exact field K. Zero coefficients are never
// stored; the term map iterates in the canonical monomial order.
template <class K>
class Poly {
public:
  using TermMap = std::map<Monomial, K, MonoLess>;

private:
  TermMap terms_;
  int n_ = 0;

public:
  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  Poly(const Monomial& m, const K& c) : n_(m.nvars()) { add_term(m, c); }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const K& c) {
    if (c == K(0)) return;
    if (n_ == 0) n_ = m.nvars();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == K(0)) terms_.erase(it);
    }
  }

  K coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
  }
  bool is_homogeneous() const {
    int d = -2;
    for (auto& [m, c] : terms_) {
      if (d == -2) d = m.deg();
      else if (m.deg() != d) return false;
    }
    return true;
  }

  Poly operator-() const {
    Poly r(n_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (n_ == 0) n_ = o.n_;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (n_ == 0) n_ = o.n_;
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_ ? a.n_ : b.n_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator*(const K& c) const {
    Poly r(n_);
    if (c == K(0)) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }
  Poly operator/(const K& c) const {
    Poly r(n_);
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k / c);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(int var) const {
    Poly r(n_);
    for (auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial d = m;
      d.e[var] -= 1;
      r.add_term(d, c * K(static_cast<long>(m.e[var])));
    }
    return r;
  }

  // Graded piece of the given total degree.
  Poly graded_piece(int degree) const {
    Poly r(n_);
    for (auto& [m, c] : terms_)
      if (m.deg() == degree) r.terms_.emplace(m, c);
    return r;
  }
  std::vector<int> degrees_present() const {
    std::vector<int> ds;
    for (auto& [m, c] : terms_) {
      int d = m.deg();
      bool found = false;
      for (int x : ds) found |= (x == d);
      if (!found) ds.push_back(d);
    }
    return ds;
  }
};

using GPoly = Poly<GQ>;

std::string poly_str(const GPoly& p, const std::vector<std::string>& vars);
cplx eval_poly(const GPoly& p, const std::vector<cplx>& z);

}  // namespace lgtt

#endif
