#pragma once

#include <vector>

#include "cuntzpos/hermitian.hpp"
#include "cuntzpos/words.hpp"

namespace cuntzpos {

/// Self-adjoint element A0 (x) I + sum_i A_i (x) S_i + sum_i A_i^* (x) S_i^*
/// of M_p(S_n).
struct HermSElement {
  int n = 0;
  std::size_t p = 0;
  HermMatrix a0;
  std::vector<CMatrix> a;  // A_1 .. A_n

  HermSElement() = default;
  HermSElement(HermMatrix a0, std::vector<CMatrix> a);

  /// Scalar element a0 + sum alpha_i S_i + conj(alpha_i) S_i^*.
  static HermSElement scalar(double a0, const std::vector<cplx>& alpha);

  /// Same element viewed in S_m, m >= n, with A_{n+1} = ... = A_m = 0.
  HermSElement padded(int m) const;

  /// S_i^* X S_i: keeps A0 and A_i, zeroes every other generator coefficient.
  HermSElement rho(int i) const;

  HermSElement scaled(double t) const;
};

/// General (not necessarily self-adjoint) element C0 (x) I + sum C_i (x) S_i
/// + sum D_i (x) S_i^* of M_p(S_n).
struct SElement {
  int n = 0;
  std::size_t p = 0;
  CMatrix identity_coeff;
  std::vector<CMatrix> gen_coeff;      // coefficient of S_i
  std::vector<CMatrix> gen_adj_coeff;  // coefficient of S_i^*

  bool is_zero() const;
};

TCElement<cplx> from_s_element(const HermSElement& e);

/// Reads (A0, A_i) back from a word element supported on {I, S_i, S_i^*}.
/// Throws if the element has other support or is not self-adjoint.
HermSElement to_s_element(const TCElement<cplx>& x);

}  // namespace cuntzpos
