#ifndef LGTT_RATIONAL_HPP
#define LGTT_RATIONAL_HPP

#include <gmpxx.h>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgtt {

// Exact rational scalar. mpq_class keeps denominators positive and reduced
// after canonicalize(), which every constructor and operator here maintains.
class Rat {
  mpq_class v_;

public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const std::string& s) : v_(s) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return v_ < 0 ? -*this : *this; }
  double to_double() const { return v_.get_d(); }

  // Numerator/denominator as long; throws if they do not fit.
  long num_long() const {
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rat numerator too large");
    return v_.get_num().get_si();
  }
  long den_long() const {
    if (!v_.get_den().fits_slong_p()) throw std::overflow_error("Rat denominator too large");
    return v_.get_den().get_si();
  }

  std::string str() const { return v_.get_str(); }
};

Rat rat_from_string(const std::string& s);  // accepts "p", "p/q"
Rat lcm(const Rat& a, const Rat& b);        // on integers stored as Rat

// Gaussian rational re + im*i with exact components.
struct GQ {
  Rat re, im;

  GQ() = default;
  GQ(long n) : re(n), im(0) {}
  GQ(const Rat& r) : re(r), im(0) {}
  GQ(const Rat& r, const Rat& i) : re(r), im(i) {}

  static GQ i_unit() { return GQ(Rat(0), Rat(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GQ conj() const { return GQ(re, -im); }
  Rat norm2() const { return re * re + im * im; }

  GQ operator-() const { return GQ(-re, -im); }
  GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
  GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
  GQ& operator*=(const GQ& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r; im = i;
    return *this;
  }
  GQ& operator/=(const GQ& o) {
    Rat n2 = o.norm2();
    if (n2.is_zero()) throw std::domain_error("GQ: division by zero");
    GQ num = *this; num *= o.conj();
    re = num.re / n2; im = num.im / n2;
    return *this;
  }

  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
  friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  std::string str() const;
};

using cplx = std::complex<double>;

}  // namespace lgtt

#endif
