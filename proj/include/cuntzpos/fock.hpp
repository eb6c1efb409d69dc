#pragma once

// Truncated full Fock space over an n-letter alphabet and the left creation
// operators on it. Compressions of S_n elements onto the truncation are exact
// (elements are linear in the generators), so a negative eigenvalue at any
// depth refutes positivity. The converse does not hold at finite depth.

#include <optional>
#include <tuple>
#include <vector>

#include "cuntzpos/element.hpp"
#include "cuntzpos/hermitian.hpp"
#include "cuntzpos/words.hpp"

namespace cuntzpos {

class TruncatedFock {
 public:
  TruncatedFock(int n, int depth);

  int n() const { return n_; }
  int depth() const { return depth_; }
  std::size_t dim() const { return basis_.size(); }

  /// Words of length <= depth ordered by (length, lexicographic).
  const std::vector<Word>& basis() const { return basis_; }

  /// Position of w in the basis, or nullopt when |w| > depth.
  std::optional<std::size_t> index(const Word& w) const;

  /// Number of basis words of length < len.
  std::size_t count_shorter_than(int len) const;

  /// (n^{d+1} - 1) / (n - 1), or d + 1 for n = 1.
  static std::size_t dimension(int n, int depth);

 private:
  int n_;
  int depth_;
  std::vector<Word> basis_;
  std::vector<std::size_t> level_offset_;
};

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  cplx value;
};

/// Square sparse operator as coordinate triples, at most one per (row, col).
struct SparseOp {
  std::size_t dim = 0;
  std::vector<SparseEntry> entries;

  CMatrix to_dense() const;
  SparseOp adjoint() const;
  bool is_zero() const { return entries.empty(); }
};

SparseOp operator*(const SparseOp& a, const SparseOp& b);

/// L_i: w -> i.w for |w| < depth, words of full length map to 0.
SparseOp creation_matrix(int i, const TruncatedFock& f);

/// Linear extension of S_mu S_nu^* -> L_mu L_nu^*, coefficient (x) operator.
template <class T>
Matrix<T> evaluate(const TCElement<T>& x, const TruncatedFock& f) {
  if (x.n() != f.n()) throw ShapeError("evaluate: alphabet mismatch");
  const std::size_t dim = f.dim();
  const std::size_t p = x.p();
  Matrix<T> out(p * dim, p * dim);
  const auto& basis = f.basis();
  for (const auto& [t, c] : x.terms()) {
    for (std::size_t col = 0; col < dim; ++col) {
      const Word& w = basis[col];
      if (!is_prefix(t.nu, w)) continue;
      Word image(t.mu);
      image.insert(image.end(), w.begin() + static_cast<std::ptrdiff_t>(t.nu.size()), w.end());
      auto row = f.index(image);
      if (!row) continue;
      for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) out(a * dim + *row, b * dim + col) += c(a, b);
    }
  }
  return out;
}

/// A0 (x) I + sum A_i (x) L_i + sum A_i^* (x) L_i^* on the truncation.
HermMatrix compress_element(const HermSElement& e, const TruncatedFock& f);

/// Smallest eigenvalue of compress_element(e, depth) from the level-wise
/// Schur recursion on the Fock tree, by bisection. Accurate to `tol`.
double fock_min_eig(const HermSElement& e, int depth, double tol = 1e-12);

struct FockWitness {
  int depth = 0;
  double eigmin = 0.0;
  std::vector<cplx> vector;  // unit eigenvector in C^p (x) Fock
};

constexpr double kFockTolerance = 1e-8;

/// Largest depth <= 8 with p * dim <= 2048.
int default_fock_depth(int n, std::size_t p);

/// Scans depths 0..max_depth and returns the first one at which the
/// compression has an eigenvalue below -tol, with its eigenvector.
std::optional<FockWitness> negativity_witness(const HermSElement& e, int max_depth, double tol = kFockTolerance);

/// Re-checks a witness: unit vector, Rayleigh quotient below -tol.
bool verify_fock_witness(const HermSElement& e, const FockWitness& w, double tol = kFockTolerance);

}  // namespace cuntzpos
