#pragma once

#include <stdexcept>
#include <vector>

#include "cuntzpos/matrix.hpp"

namespace cuntzpos {

/// Square complex matrix that is self-adjoint up to 1e-12 (relative to its
/// largest entry, floor 1). The stored matrix is exactly symmetrized.
class HermMatrix {
 public:
  HermMatrix() = default;
  explicit HermMatrix(const CMatrix& m);

  static HermMatrix identity(std::size_t n) { return HermMatrix(CMatrix::identity(n)); }
  static HermMatrix zeros(std::size_t n) { return HermMatrix(CMatrix(n, n)); }

  const CMatrix& mat() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend HermMatrix operator+(const HermMatrix& a, const HermMatrix& b) { return HermMatrix(a.m_ + b.m_); }
  friend HermMatrix operator-(const HermMatrix& a, const HermMatrix& b) { return HermMatrix(a.m_ - b.m_); }
  friend HermMatrix operator*(double s, const HermMatrix& a) { return HermMatrix(a.m_ * cplx(s)); }

 private:
  CMatrix m_;
};

/// Hermitian part (M + M*) / 2 of an arbitrary square matrix.
HermMatrix hermitian_part(const CMatrix& m);

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // unitary, columns
};

EigResult herm_eig(const HermMatrix& h);

/// Ascending eigenvalues without eigenvectors.
std::vector<double> herm_eigenvalues(const HermMatrix& h);

double min_eig(const HermMatrix& h);

/// Frobenius-nearest PSD matrix (negative eigenvalues clipped to 0).
HermMatrix psd_project(const HermMatrix& h);

/// Eigenvalues clipped from below at `floor` instead of 0.
HermMatrix eig_clip(const HermMatrix& h, double floor);

/// Principal square root of a PSD matrix. Eigenvalues down to -1e-10 are
/// treated as zero; anything more negative is rejected.
HermMatrix herm_sqrt(const HermMatrix& p);

bool is_psd(const HermMatrix& h, double tol);

}  // namespace cuntzpos
