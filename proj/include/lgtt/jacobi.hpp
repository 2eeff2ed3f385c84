#ifndef LGTT_JACOBI_HPP
#define LGTT_JACOBI_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lgtt/weights.hpp"

namespace lgtt {

struct DegenerateError : std::runtime_error {
  long offending_wdeg;
  DegenerateError(const std::string& msg, long wd)
      : std::runtime_error(msg + " (weighted degree " + std::to_string(wd) + ")"),
        offending_wdeg(wd) {}
};

// All monomials with integer weighted degree W under weights Q.
std::vector<Monomial> monomials_of_wdeg(int nvars, const std::vector<long>& Q, long W);

// U(1) charge l(A) = sum_i (beta_i + 1) Q_i of A = z^beta dz_1...dz_n.
long charge(const Monomial& A, const WeightSystem& w);

// ---------------------------------------------------------------- potential

// F(z,u) = f + sum_i u_i psi_i with each psi_i a weight-1 monomial.
template <class K>
struct PotentialT {
  Poly<K> f;
  WeightSystem w;
  std::vector<Monomial> marginals;
  std::vector<K> u;

  PotentialT(Poly<K> f_, WeightSystem w_, std::vector<Monomial> psis = {},
             std::vector<K> us = {})
      : f(std::move(f_)), w(std::move(w_)), marginals(std::move(psis)), u(std::move(us)) {
    if (marginals.size() != u.size())
      throw std::domain_error("potential: marginal/parameter count mismatch");
    for (auto& [m, c] : f.terms())
      if (w.wdeg(m) != w.d) throw std::domain_error("potential: f is not weight-1");
    for (auto& psi : marginals)
      if (w.wdeg(psi) != w.d)
        throw std::domain_error("potential: marginal direction is not weight-1");
  }

  int nvars() const { return f.nvars(); }
  int s() const { return static_cast<int>(marginals.size()); }

  Poly<K> F() const {
    Poly<K> r = f;
    for (size_t i = 0; i < marginals.size(); ++i) r += Poly<K>(marginals[i], u[i]);
    return r;
  }
};

using LGPotential = PotentialT<GQ>;

// ------------------------------------------------------------------- basis

template <class K>
struct JacobiBasisT {
  std::vector<Monomial> monomials;  // phi_0 = 1 first, weight-ascending
  std::vector<long> charges;        // l_a
  std::vector<long> wdegs;
  long mu = 0;
  std::vector<int> prime_indices;   // Jac(F)' selection (homogeneous case)
  long mu_prime = 0;
  int socle_index = -1;
  K hessian_socle_coeff = K(0);     // normal_form(det Hess F) = c * phi_socle

  int index_of(const Monomial& m) const {
    for (size_t a = 0; a < monomials.size(); ++a)
      if (monomials[a] == m) return static_cast<int>(a);
    return -1;
  }
};

using JacobiBasis = JacobiBasisT<GQ>;

// ---------------------------------------------------------- graded reducer

// Normal forms modulo the Jacobian ideal <dF/dz_1, ..., dF/dz_n>, computed
// degree by degree: F is weighted-homogeneous for every u, so each graded
// piece of the ideal is the row space of a finite Macaulay matrix.
//
// The monomial basis is fixed at the undeformed point: per degree, the
// standard monomials are the Gaussian non-pivots of the ideal of f, and the
// deformed ideal is echelonized with pivots restricted to the complement.
// A rank defect there means the quotient degenerates (or the transported
// basis fails) at this u, and is reported with the offending degree.
template <class K>
class JacobiRing {
public:
  explicit JacobiRing(PotentialT<K> P, bool track_cofactors = false)
      : P_(std::move(P)), track_(track_cofactors) {
    Poly<K> F = P_.F();
    for (int i = 0; i < P_.nvars(); ++i) {
      gens_.push_back(F.derivative(i));
      ref_gens_.push_back(P_.f.derivative(i));
    }
  }

  const PotentialT<K>& potential() const { return P_; }
  const std::vector<Poly<K>>& jacobian_generators() const { return gens_; }

  // Unique representative supported on standard monomials.
  Poly<K> normal_form(const Poly<K>& g) {
    ensure_nondegenerate();
    Poly<K> out(P_.nvars());
    for_each_graded_piece(g, [&](long W, Poly<K> piece) {
      out += reduce_in_block(W, std::move(piece), nullptr);
    });
    return out;
  }

  // g = r + sum_i h_i dF/dz_i with r the normal form. Requires cofactors.
  std::pair<Poly<K>, std::vector<Poly<K>>> nf_decompose(const Poly<K>& g) {
    if (!track_) throw std::logic_error("JacobiRing: cofactor tracking disabled");
    ensure_nondegenerate();
    std::vector<Poly<K>> h(P_.nvars(), Poly<K>(P_.nvars()));
    Poly<K> out(P_.nvars());
    for_each_graded_piece(g, [&](long W, Poly<K> piece) {
      out += reduce_in_block(W, std::move(piece), &h);
    });
    return {out, h};
  }

  const JacobiBasisT<K>& basis() {
    if (!basis_) compute_basis_impl();
    return *basis_;
  }

  long milnor() {
    const auto& B = basis();
    // cross-check against prod (1/q_i - 1) for the quasi-homogeneous formula
    Rat prod(1);
    for (auto& qi : P_.w.q) prod *= Rat(1) / qi - Rat(1);
    if (!prod.is_integer() || prod != Rat(B.mu))
      throw std::runtime_error("milnor number mismatch: basis count " + std::to_string(B.mu) +
                               " vs weight formula " + prod.str());
    return B.mu;
  }

  // weight-1 elements of the Jacobi basis, in basis order
  std::vector<Monomial> marginal_monomials() {
    const auto& B = basis();
    std::vector<Monomial> out;
    for (long a = 0; a < B.mu; ++a)
      if (B.wdegs[a] == P_.w.d) out.push_back(B.monomials[a]);
    return out;
  }

  std::vector<K> expand_in_basis(const Poly<K>& g) {
    const auto& B = basis();
    Poly<K> nf = normal_form(g);
    std::vector<K> c(B.mu, K(0));
    for (auto& [m, k] : nf.terms()) {
      int a = B.index_of(m);
      if (a < 0) throw std::runtime_error("normal form outside basis support");
      c[a] = k;
    }
    return c;
  }

  Poly<K> hessian_determinant() const;

private:
  struct Row {
    Poly<K> poly;               // monic at its pivot monomial
    std::vector<Poly<K>> cof;   // poly = sum_i cof[i] * gens_[i]
  };
  struct Block {
    std::unordered_map<Monomial, Row, MonoHash> pivots;      // non-standard monomials
    std::unordered_map<Monomial, char, MonoHash> standard;   // fixed at u = 0
    std::vector<Monomial> standard_sorted;
  };

  PotentialT<K> P_;
  bool track_;
  std::vector<Poly<K>> gens_;       // dF/dz_i
  std::vector<Poly<K>> ref_gens_;   // df/dz_i, pins the basis
  std::unordered_map<long, Block> blocks_;
  std::optional<JacobiBasisT<K>> basis_;
  bool checked_ = false;

  template <class Fn>
  void for_each_graded_piece(const Poly<K>& g, Fn&& fn) {
    std::vector<long> ws;
    for (auto& [m, c] : g.terms()) {
      long W = P_.w.wdeg(m);
      if (std::find(ws.begin(), ws.end(), W) == ws.end()) ws.push_back(W);
    }
    std::sort(ws.begin(), ws.end());
    for (long W : ws) {
      Poly<K> piece(P_.nvars());
      for (auto& [m, c] : g.terms())
        if (P_.w.wdeg(m) == W) piece.add_term(m, c);
      fn(W, std::move(piece));
    }
  }

  // Within one graded block, map order is graded-lex descending from
  // begin(): the first monomial is the largest.
  Block& block(long W) {
    auto it = blocks_.find(W);
    if (it != blocks_.end()) return it->second;
    Block& b = blocks_[W];
    auto all = monomials_of_wdeg(P_.nvars(), P_.w.Q, W);

    // reference pass at u = 0 pins the standard monomials of this degree
    std::unordered_map<Monomial, Poly<K>, MonoHash> ref;
    for (int i = 0; i < P_.nvars(); ++i) {
      long gw = P_.w.d - P_.w.Q[i];
      if (W < gw) continue;
      for (auto& m : monomials_of_wdeg(P_.nvars(), P_.w.Q, W - gw)) {
        Poly<K> row = ref_gens_[i] * Poly<K>(m, K(1));
        while (!row.is_zero()) {
          const Monomial lead = row.terms().begin()->first;
          auto hit = ref.find(lead);
          if (hit == ref.end()) {
            ref.emplace(lead, row / row.terms().begin()->second);
            break;
          }
          row -= hit->second * row.terms().begin()->second;
        }
      }
    }
    for (auto& m : all)
      if (!ref.count(m)) {
        b.standard.emplace(m, 1);
        b.standard_sorted.push_back(m);
      }

    // deformed ideal, pivots restricted to the non-standard complement
    for (int i = 0; i < P_.nvars(); ++i) {
      long gw = P_.w.d - P_.w.Q[i];
      if (W < gw) continue;
      for (auto& m : monomials_of_wdeg(P_.nvars(), P_.w.Q, W - gw)) {
        Row r;
        r.poly = gens_[i] * Poly<K>(m, K(1));
        if (track_) {
          r.cof.assign(P_.nvars(), Poly<K>(P_.nvars()));
          r.cof[i] = Poly<K>(m, K(1));
        }
        insert_row(b, std::move(r), W);
      }
    }
    // every non-standard monomial must be hit, or the quotient degenerates
    for (auto& m : all)
      if (!b.standard.count(m) && !b.pivots.count(m))
        throw DegenerateError("quotient degenerates at this parameter point", W);
    return b;
  }

  const Monomial* first_nonstandard(const Block& b, const Poly<K>& p) const {
    for (auto& [m, c] : p.terms())
      if (!b.standard.count(m)) return &m;
    return nullptr;
  }

  void insert_row(Block& b, Row r, long W) {
    for (;;) {
      if (r.poly.is_zero()) return;
      const Monomial* leadp = first_nonstandard(b, r.poly);
      if (!leadp)
        throw DegenerateError("ideal meets the transported basis span", W);
      const Monomial lead = *leadp;  // the map behind leadp is about to change
      auto it = b.pivots.find(lead);
      if (it == b.pivots.end()) {
        K inv = K(1) / r.poly.coeff(lead);
        r.poly = r.poly * inv;
        if (track_)
          for (auto& c : r.cof) c = c * inv;
        b.pivots.emplace(lead, std::move(r));
        return;
      }
      K c = r.poly.coeff(lead);
      r.poly -= it->second.poly * c;
      if (track_)
        for (int i = 0; i < P_.nvars(); ++i) r.cof[i] -= it->second.cof[i] * c;
    }
  }

  Poly<K> reduce_in_block(long W, Poly<K> g, std::vector<Poly<K>>* h) {
    Block& b = block(W);
    for (;;) {
      const Monomial* hitp = first_nonstandard(b, g);
      if (!hitp) return g;
      const Monomial hit = *hitp;
      const Row& row = b.pivots.at(hit);
      K c = g.coeff(hit);
      g -= row.poly * c;
      if (h)
        for (int i = 0; i < P_.nvars(); ++i) (*h)[i] += row.cof[i] * c;
    }
  }

  const std::vector<Monomial>& standard_monomials(long W) {
    return block(W).standard_sorted;
  }

  // Non-isolated singularities leave quotient dimension above the socle
  // degree; scanning one full period d past it is decisive here. Building
  // the blocks also runs the per-degree rank check at the deformed point.
  void ensure_nondegenerate() {
    if (checked_) return;
    checked_ = true;
    long socle = P_.w.socle_wdeg();
    for (long W = socle + 1; W <= socle + P_.w.d; ++W) {
      if (!standard_monomials(W).empty()) {
        checked_ = false;
        throw DegenerateError("non-isolated singularity at this parameter point", W);
      }
    }
  }

  void compute_basis_impl();
};

// ----------------------------------------------------- template definitions

template <class K>
Poly<K> JacobiRing<K>::hessian_determinant() const {
  int n = P_.nvars();
  Poly<K> F = P_.F();
  std::vector<std::vector<Poly<K>>> H(n, std::vector<Poly<K>>(n, Poly<K>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      H[i][j] = F.derivative(i).derivative(j);
      H[j][i] = H[i][j];
    }
  // Laplace expansion over permutations; n <= 6 keeps this tiny
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Poly<K> det(n);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Poly<K> term(Monomial(n), K(inv % 2 ? -1 : 1));
    for (int i = 0; i < n; ++i) term *= H[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

template <class K>
void JacobiRing<K>::compute_basis_impl() {
  ensure_nondegenerate();
  JacobiBasisT<K> B;
  long socle = P_.w.socle_wdeg();
  long QS = 0;
  for (long Qi : P_.w.Q) QS += Qi;
  for (long W = 0; W <= socle; ++W) {
    for (auto& m : standard_monomials(W)) {
      B.monomials.push_back(m);
      B.wdegs.push_back(W);
      B.charges.push_back(W + QS);
    }
  }
  B.mu = static_cast<long>(B.monomials.size());
  if (B.monomials.empty() || !B.monomials[0].is_one())
    throw std::runtime_error("basis does not start at phi_0 = 1");

  // socle: the unique top-degree element
  int count_top = 0;
  for (long a = 0; a < B.mu; ++a)
    if (B.wdegs[a] == socle) {
      B.socle_index = static_cast<int>(a);
      ++count_top;
    }
  if (count_top != 1)
    throw DegenerateError("socle is not one-dimensional", socle);

  // Jac(F)': homogeneous degree-n case, polynomial degree divisible by n
  int n = P_.nvars();
  bool homogeneous_n = P_.w.is_homogeneous_case();
  if (homogeneous_n) {
    for (long a = 0; a < B.mu; ++a)
      if (B.monomials[a].deg() % n == 0) B.prime_indices.push_back(static_cast<int>(a));
  }
  B.mu_prime = static_cast<long>(B.prime_indices.size());

  Poly<K> hess_nf = normal_form(hessian_determinant());
  for (auto& [m, c] : hess_nf.terms()) {
    if (!(m == B.monomials[B.socle_index]))
      throw std::runtime_error("hessian class not supported on the socle");
    B.hessian_socle_coeff = c;
  }
  if (B.hessian_socle_coeff == K(0))
    throw DegenerateError("hessian class vanishes", socle);
  basis_ = std::move(B);
}

using GJacobiRing = JacobiRing<GQ>;

// Convenience wrappers matching the operation names.
GPoly normal_form(const GPoly& g, const LGPotential& P);
JacobiBasis compute_basis(const LGPotential& P);
long milnor_number(const LGPotential& P);
std::vector<Monomial> marginal_monomials(const GPoly& f, const WeightSystem& w);

}  // namespace lgtt

#endif
