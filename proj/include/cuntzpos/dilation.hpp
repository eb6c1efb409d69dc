#pragma once

// Isometric dilations of row contractions and the 2x2 block dilation of
// Toeplitz-Cuntz isometries to Cuntz isometries.
//
// Both constructions live on infinite-dimensional spaces. Here they are
// realized on Fock truncations, and the identities they satisfy are checked
// on declared interior subspaces where the truncation is invisible.

#include <stdexcept>
#include <vector>

#include "cuntzpos/element.hpp"
#include "cuntzpos/hermitian.hpp"

namespace cuntzpos {

class NotContractionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (A_1, ..., A_n) on C^p with sum_i A_i A_i^* <= I (to 1e-10).
class RowContraction {
 public:
  explicit RowContraction(std::vector<CMatrix> a);

  int n() const { return static_cast<int>(a_.size()); }
  std::size_t p() const { return p_; }
  const std::vector<CMatrix>& a() const { return a_; }
  const CMatrix& operator[](std::size_t i) const { return a_[i]; }

  /// Row operator [A_1 ... A_n] : C^{np} -> C^p.
  CMatrix row_operator() const;

 private:
  std::size_t p_;
  std::vector<CMatrix> a_;
};

struct DilationResult {
  std::vector<CMatrix> v;          // V_1 .. V_n
  std::size_t p = 0;               // dim H
  std::size_t defect_dim = 0;      // q = n p
  std::size_t fock_dim = 0;        // words of length <= depth
  std::size_t interior_dim = 0;    // H + (words of length < depth) (x) D
  double compression_residual = 0.0;  // max_i ||P_H V_i|_H - A_i||_F
  double isometry_residual = 0.0;     // max_{i,j} ||P_int (V_i^* V_j - delta_ij I) P_int||_F

  std::size_t dim() const { return p + fock_dim * defect_dim; }
};

/// V_i (h + sum_w e_w (x) d_w) = A_i h + e_empty (x) D_A (delta_i (x) h) + sum_w e_{i.w} (x) d_w
/// on H + (Fock_{<=depth} (x) D), with defect D_A = (I - R^*R)^{1/2}.
DilationResult dilate(const RowContraction& a, int depth = 4);

/// A0 (x) I + sum A_k (x) B_k + sum A_k^* (x) B_k^*.
HermMatrix ucp_evaluate(const HermSElement& e, const RowContraction& b);

/// T~_i = [[T_i, X_i], [0, Y_i]].
std::vector<CMatrix> block_dilation_build(const std::vector<CMatrix>& t, const std::vector<CMatrix>& x,
                                          const std::vector<CMatrix>& y);

struct BlockDilationResiduals {
  double isometry = 0.0;  // max_i ||P (T~_i^* T~_i - I) P||_F
  double cuntz = 0.0;     // ||P (sum_i T~_i T~_i^* - I) P||_F
};

BlockDilationResiduals block_dilation_residuals(const std::vector<CMatrix>& tilde, const CMatrix& interior);

/// Cuntz family on l^2({0, ..., dim-1}): C_i e_k = e_{nk + i - 1} when in range.
/// sum_i C_i C_i^* = I holds exactly; C_i^* C_i = I holds on {k : nk + n - 1 < dim}.
std::vector<CMatrix> truncated_cuntz_family(int n, std::size_t dim);

/// The block dilation instantiated on the depth-d Fock truncation: T_i are
/// creation operators, X_1 projects onto ran(I - sum T_i T_i^*), X_i = 0
/// otherwise, Y_1 = C_1 W with W the partial isometry from the nonempty
/// words onto the whole space, Y_i = C_i otherwise.
struct FockBlockDilation {
  std::vector<CMatrix> t, x, y;
  std::vector<CMatrix> tilde;
  CMatrix interior;  // diagonal projection on H + H
};

FockBlockDilation fock_block_dilation(int n, int depth);

}  // namespace cuntzpos
