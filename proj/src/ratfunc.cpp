#include "lgtt/ratfunc.hpp"

#include <cmath>

namespace lgtt {

UPoly UPoly::monomial(int k, const GQ& a) {
  UPoly p;
  if (a.is_zero()) return p;
  p.c.assign(k + 1, GQ(0));
  p.c[k] = a;
  return p;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), GQ(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, GQ(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

UPoly UPoly::operator*(const GQ& s) const {
  UPoly r;
  if (s.is_zero()) return r;
  r.c = c;
  for (auto& x : r.c) x *= s;
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r;
  for (size_t k = 1; k < c.size(); ++k) r.c.push_back(c[k] * GQ(static_cast<long>(k)));
  r.trim();
  return r;
}

cplx UPoly::eval(cplx u) const {
  cplx acc = 0;
  for (size_t k = c.size(); k-- > 0;) acc = acc * u + c[k].to_complex();
  return acc;
}

GQ UPoly::eval_exact(const GQ& u) const {
  GQ acc(0);
  for (size_t k = c.size(); k-- > 0;) acc = acc * u + c[k];
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string term;
    std::string cs = c[k].str();
    if (k == 0) term = cs;
    else {
      std::string pw = (k == 1) ? var : var + "^" + std::to_string(k);
      if (cs == "1") term = pw;
      else if (cs == "-1") term = "-" + pw;
      else if (c[k].is_real() || c[k].re.is_zero()) term = cs + "*" + pw;
      else term = "(" + cs + ")*" + pw;
    }
    if (s.empty()) s = term;
    else if (term[0] == '-') s += " - " + term.substr(1);
    else s += " + " + term;
  }
  return s;
}

UPoly upoly_divmod(const UPoly& a, const UPoly& b, UPoly* rem) {
  if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
  UPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    GQ f = r.lead() / b.lead();
    UPoly t = UPoly::monomial(k, f);
    q = q + t;
    r = r - b * t;
  }
  if (rem) *rem = r;
  return q;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r;
    upoly_divmod(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  GQ inv = GQ(1) / a.lead();
  return a * inv;
}

RatFunc::RatFunc(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.is_zero()) {
    den = UPoly(1);
    return;
  }
  UPoly g = upoly_gcd(num, den);
  if (g.degree() > 0) {
    num = upoly_divmod(num, g, nullptr);
    den = upoly_divmod(den, g, nullptr);
  }
  GQ inv = GQ(1) / den.lead();
  num = num * inv;
  den = den * inv;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num = -r.num;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  *this = RatFunc(num * o.den + o.num * den, den * o.den);
  return *this;
}
RatFunc& RatFunc::operator-=(const RatFunc& o) {
  *this = RatFunc(num * o.den - o.num * den, den * o.den);
  return *this;
}
RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num * o.num, den * o.den);
  return *this;
}
RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  *this = RatFunc(num * o.den, den * o.num);
  return *this;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
}

std::string RatFunc::str(const std::string& var) const {
  if (den == UPoly(1)) return num.str(var);
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

std::vector<cplx> poly_roots(std::vector<cplx> a, double tol) {
  while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
  if (a.size() <= 1) return {};
  int n = static_cast<int>(a.size()) - 1;
  for (auto& x : a) x /= a[n];
  // Durand-Kerner from staggered starting points
  std::vector<cplx> z(n);
  cplx seed(0.4, 0.9);
  z[0] = seed;
  for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
  auto eval = [&](cplx x) {
    cplx acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * x + a[k];
    return acc;
  };
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      cplx d = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[i] - z[j];
      cplx step = eval(z[i]) / d;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < tol) break;
  }
  return z;
}

std::vector<cplx> upoly_roots(const UPoly& p, double tol) {
  std::vector<cplx> a;
  for (auto& x : p.c) a.push_back(x.to_complex());
  return poly_roots(std::move(a), tol);
}

}  // namespace lgtt
