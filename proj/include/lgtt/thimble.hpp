#ifndef LGTT_THIMBLE_HPP
#define LGTT_THIMBLE_HPP

#include <vector>

#include "lgtt/jacobi.hpp"

namespace lgtt {

using IMat = std::vector<std::vector<long>>;

IMat imat_mul(const IMat& A, const IMat& B);
IMat imat_identity(int n);
long imat_det(IMat A);  // fraction-free Bareiss

// Saturated integer kernel basis of A (columns of V past the rank in the
// Smith normal form U A V = D).
std::vector<std::vector<long>> integer_kernel(const IMat& A);

// Basis of the lattice spanned by the columns of A (column Hermite form).
std::vector<std::vector<long>> column_lattice_basis(const IMat& A);

// The thimble side: gamma^- supports e^{+F}, gamma^+ supports e^{-F}.
enum class Side { minus, plus };

// Product thimbles of a diagonal Fermat potential sum_i z_i^{m_i}, with the
// integer change to a monodromy-adapted basis: the first n_invariant rows
// span ker(T - 1) (saturated), the rest lie inside im(T - 1), where T is the
// sector-rotation monodromy acting on products of 1-d thimbles.
struct ThimbleBasis {
  std::vector<int> m;       // per-variable Fermat exponent
  long rank = 0;            // prod (m_i - 1)
  int n_invariant = 0;
  IMat monodromy;           // T on the product basis
  IMat adapted;             // rows: adapted thimble = sum_j adapted[k][j] * product_j
};

// Index helpers for the product basis: thimble index a <-> sector tuple j.
std::vector<int> product_sectors(const ThimbleBasis& B, long a);

ThimbleBasis thimble_basis(const LGPotential& P, Side side);

// diagonal Fermat detection; exponents per variable or empty when not diagonal
std::vector<int> diagonal_exponents(const GPoly& f);

}  // namespace lgtt

#endif
