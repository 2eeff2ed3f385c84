#ifndef LGTT_RATFUNC_HPP
#define LGTT_RATFUNC_HPP

#include <string>
#include <vector>

#include "lgtt/rational.hpp"

namespace lgtt {

// Dense univariate polynomial over the Gaussian rationals (variable "u").
struct UPoly {
  std::vector<GQ> c;  // c[k] multiplies u^k; no trailing zeros

  UPoly() = default;
  UPoly(long v) { if (v) c.push_back(GQ(v)); }
  explicit UPoly(const GQ& v) { if (!v.is_zero()) c.push_back(v); }
  static UPoly var() { return UPoly::monomial(1, GQ(1)); }
  static UPoly monomial(int k, const GQ& a);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const GQ& lead() const { return c.back(); }
  GQ at(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : GQ(0); }

  void trim() { while (!c.empty() && c.back().is_zero()) c.pop_back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator*(const GQ& s) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const;
  cplx eval(cplx u) const;
  GQ eval_exact(const GQ& u) const;
  std::string str(const std::string& var = "u") const;
};

UPoly upoly_divmod(const UPoly& a, const UPoly& b, UPoly* rem);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic gcd

// Field of fractions num/den, den monic with gcd(num, den) = 1.
struct RatFunc {
  UPoly num, den;

  RatFunc() : num(), den(1) {}
  RatFunc(long v) : num(v), den(1) {}
  explicit RatFunc(const GQ& v) : num(v), den(1) {}
  explicit RatFunc(UPoly n) : num(std::move(n)), den(1) {}
  RatFunc(UPoly n, UPoly d);

  static RatFunc var() { return RatFunc(UPoly::var()); }

  bool is_zero() const { return num.is_zero(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative() const;  // quotient rule
  cplx eval(cplx u) const { return num.eval(u) / den.eval(u); }
  std::string str(const std::string& var = "u") const;
};

// Roots of a complex-coefficient polynomial by Durand-Kerner iteration.
std::vector<cplx> upoly_roots(const UPoly& p, double tol = 1e-13);
std::vector<cplx> poly_roots(std::vector<cplx> coeffs, double tol = 1e-13);

}  // namespace lgtt

#endif
