#pragma once

// The operator system E_n = span{E_00, E_0i, E_i0, sum_i E_ii} in M_{n+1},
// the unital map psi: M_{n+1} -> S_n with psi(E_ij) = (R^*R)_ij where
// R = (I, S_1^*, ..., S_n^*) / sqrt(2), and Choi-matrix tests for complete
// positivity.

#include <vector>

#include "cuntzpos/element.hpp"
#include "cuntzpos/fock.hpp"
#include "cuntzpos/hermitian.hpp"

namespace cuntzpos {

/// Element of M_p(E_n): p x p coefficient blocks of
/// [[A00, A01 .. A0n], [A10, Bdiag, 0 ..], .., [An0, 0 .., Bdiag]].
struct ENElement {
  int n = 0;
  std::size_t p = 0;
  CMatrix a00;
  std::vector<CMatrix> a0i;  // row 0, columns 1..n
  std::vector<CMatrix> ai0;  // column 0, rows 1..n
  CMatrix bdiag;

  /// Zero element with p x p blocks.
  static ENElement zeros(int n, std::size_t p);

  /// The realized (n+1)p square matrix.
  CMatrix realize() const;
};

/// psi restricted to E_n, in S_n coordinates:
/// I -> (A00 + Bdiag)/2, S_i -> A_i0/2, S_i^* -> A_0i/2.
SElement psi_apply(const ENElement& x);

/// Assembles (phi(E_ij))_ij.
CMatrix choi_matrix(const std::vector<std::vector<CMatrix>>& images);

/// Minimum eigenvalue of the Choi matrix.
double choi_min_eig(const std::vector<std::vector<CMatrix>>& images);

bool is_cp(const std::vector<std::vector<CMatrix>>& images, double tol = 1e-10);

/// Min eigenvalue of the block matrix (psi(E_ij)) = R^*R on a Fock truncation.
double psi_choi_check(const TruncatedFock& f);

/// t (E_00 - sum E_ii) is PSD only for t = 0; checked for t in {-1, 0, 1}.
bool kernel_positivity_check(int n);

struct BaseBlockCheck {
  double total_min_eig = 0.0;          // block matrix with unit coefficients
  double doubled_total_min_eig = 0.0;  // same with every block doubled
  std::vector<double> summand_min_eigs;  // one per displayed summand
  bool sums_match = false;             // summands add up to the total exactly

  bool passed(double tol = 1e-12) const;
};

/// The (n+1) x (n+1) block matrix over M_{n+1} with blocks sum_i E_ii at
/// (0,0), E_k0 at (0,k), E_0k at (k,0), E_00 at (k,k), and its decomposition
/// into n rank-one summands.
BaseBlockCheck row_contraction_base_check(int n);

}  // namespace cuntzpos
