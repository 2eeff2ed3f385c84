#ifndef LGTT_MONOMIAL_HPP
#define LGTT_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgtt {

// Exponent vector of a monomial in up to kMaxVars variables.
inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint8_t n = 0;  // ambient variable count

  Monomial() = default;
  explicit Monomial(int nvars) : n(static_cast<uint8_t>(nvars)) {
    if (nvars < 1 || nvars > kMaxVars) throw std::domain_error("Monomial: bad variable count");
  }
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() < 1 || exps.size() > kMaxVars) throw std::domain_error("Monomial: bad variable count");
    n = static_cast<uint8_t>(exps.size());
    int i = 0;
    for (int x : exps) {
      if (x < 0) throw std::domain_error("Monomial: negative exponent");
      e[i++] = static_cast<uint16_t>(x);
    }
  }

  int nvars() const { return n; }
  int deg() const {
    int d = 0;
    for (int i = 0; i < n; ++i) d += e[i];
    return d;
  }
  bool is_one() const { return deg() == 0; }

  Monomial operator*(const Monomial& o) const {
    if (n != o.n) throw std::domain_error("Monomial: variable count mismatch");
    Monomial r(n);
    for (int i = 0; i < n; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial quotient(const Monomial& o) const {  // *this / o
    Monomial r(n);
    for (int i = 0; i < n; ++i) {
      if (o.e[i] > e[i]) throw std::domain_error("Monomial: non-divisible quotient");
      r.e[i] = e[i] - o.e[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n == b.n && a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  uint64_t key() const {  // packed hash key; exponents here stay well below 256
    uint64_t k = 0;
    for (int i = 0; i < n; ++i) k = (k << 8) | (e[i] & 0xff);
    return (k << 4) | n;
  }

  std::string str(const std::vector<std::string>& vars) const;
};

// Canonical order: total degree ascending, ties broken so that the
// lexicographically larger exponent vector (z1-heavy) comes first.
inline bool mono_less(const Monomial& a, const Monomial& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  for (int i = 0; i < a.n; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

struct MonoHash {
  size_t operator()(const Monomial& m) const { return std::hash<uint64_t>()(m.key()); }
};

// All monomials of the given total degree, in canonical order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace lgtt

#endif
