#include "cuntzpos/fock.hpp"

#include <map>

#include <Eigen/Dense>

namespace cuntzpos {

TruncatedFock::TruncatedFock(int n, int depth) : n_(n), depth_(depth) {
  if (n < 1) throw ShapeError("TruncatedFock: n must be >= 1");
  if (depth < 0) throw ShapeError("TruncatedFock: depth must be >= 0");
  basis_.reserve(dimension(n, depth));
  basis_.emplace_back();
  level_offset_.push_back(0);
  std::size_t level_begin = 0;
  for (int len = 1; len <= depth; ++len) {
    level_offset_.push_back(basis_.size());
    const std::size_t level_end = basis_.size();
    // Words of length len in lexicographic order: first letter outermost.
    std::vector<Word> next;
    for (int first = 1; first <= n; ++first) {
      for (std::size_t k = level_begin; k < level_end; ++k) {
        Word w{first};
        w.insert(w.end(), basis_[k].begin(), basis_[k].end());
        next.push_back(std::move(w));
      }
    }
    level_begin = level_end;
    for (auto& w : next) basis_.push_back(std::move(w));
  }
  level_offset_.push_back(basis_.size());
}

std::size_t TruncatedFock::dimension(int n, int depth) {
  std::size_t total = 0, level = 1;
  for (int k = 0; k <= depth; ++k) {
    total += level;
    level *= static_cast<std::size_t>(n);
  }
  return total;
}

std::size_t TruncatedFock::count_shorter_than(int len) const {
  if (len <= 0) return 0;
  if (len > depth_) return basis_.size();
  return level_offset_[static_cast<std::size_t>(len)];
}

std::optional<std::size_t> TruncatedFock::index(const Word& w) const {
  if (static_cast<int>(w.size()) > depth_) return std::nullopt;
  std::size_t value = 0;
  for (int l : w) {
    if (l < 1 || l > n_) throw ShapeError("TruncatedFock::index: letter out of range");
    value = value * static_cast<std::size_t>(n_) + static_cast<std::size_t>(l - 1);
  }
  return level_offset_[w.size()] + value;
}

CMatrix SparseOp::to_dense() const {
  CMatrix m(dim, dim);
  for (const auto& e : entries) m(e.row, e.col) = e.value;
  return m;
}

SparseOp SparseOp::adjoint() const {
  SparseOp out{dim, {}};
  out.entries.reserve(entries.size());
  for (const auto& e : entries) out.entries.push_back({e.col, e.row, std::conj(e.value)});
  return out;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  if (a.dim != b.dim) throw ShapeError("SparseOp product: dimension mismatch");
  std::map<std::size_t, std::vector<const SparseEntry*>> b_rows;
  for (const auto& e : b.entries) b_rows[e.row].push_back(&e);
  std::map<std::pair<std::size_t, std::size_t>, cplx> acc;
  for (const auto& ea : a.entries) {
    auto it = b_rows.find(ea.col);
    if (it == b_rows.end()) continue;
    for (const auto* eb : it->second) acc[{ea.row, eb->col}] += ea.value * eb->value;
  }
  SparseOp out{a.dim, {}};
  for (const auto& [rc, v] : acc) {
    if (v != cplx(0)) out.entries.push_back({rc.first, rc.second, v});
  }
  return out;
}

SparseOp creation_matrix(int i, const TruncatedFock& f) {
  if (i < 1 || i > f.n()) throw ShapeError("creation_matrix: letter out of range");
  SparseOp op{f.dim(), {}};
  const std::size_t interior = f.count_shorter_than(f.depth());
  for (std::size_t col = 0; col < interior; ++col) {
    Word w{i};
    const auto& src = f.basis()[col];
    w.insert(w.end(), src.begin(), src.end());
    op.entries.push_back({*f.index(w), col, cplx(1.0)});
  }
  return op;
}

HermMatrix compress_element(const HermSElement& e, const TruncatedFock& f) {
  if (e.n != f.n()) throw ShapeError("compress_element: alphabet mismatch");
  const std::size_t dim = f.dim();
  const std::size_t p = e.p;
  CMatrix out(p * dim, p * dim);
  for (std::size_t node = 0; node < dim; ++node)
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) out(a * dim + node, b * dim + node) = e.a0(a, b);
  for (int i = 1; i <= e.n; ++i) {
    const auto& ai = e.a[static_cast<std::size_t>(i - 1)];
    for (const auto& entry : creation_matrix(i, f).entries) {
      for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
          out(a * dim + entry.row, b * dim + entry.col) += ai(a, b);
          out(b * dim + entry.col, a * dim + entry.row) += std::conj(ai(a, b));
        }
    }
  }
  return HermMatrix(out);
}

namespace {

using RowMajorXcd = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  return Eigen::Map<const RowMajorXcd>(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                                       static_cast<Eigen::Index>(m.cols()));
}

// All nodes at one tree level share the same Schur complement, so
// compress_element(e, depth) - lambda*I is positive definite iff every
// level complement S_d = A0 - lambda, S_k = A0 - lambda - sum_i A_i^* S_{k+1}^{-1} A_i
// is positive definite.
class LevelRecursion {
 public:
  explicit LevelRecursion(const HermSElement& e) : p_(static_cast<Eigen::Index>(e.p)), a0_(to_eigen(e.a0.mat())) {
    for (const auto& m : e.a) a_.push_back(to_eigen(m));
  }

  bool positive_definite(int depth, double lambda) const {
    const Eigen::MatrixXcd shifted = a0_ - lambda * Eigen::MatrixXcd::Identity(p_, p_);
    Eigen::MatrixXcd s = shifted;
    for (int level = depth;; --level) {
      Eigen::LLT<Eigen::MatrixXcd> llt(s);
      if (llt.info() != Eigen::Success) return false;
      if (level == 0) return true;
      Eigen::MatrixXcd next = shifted;
      for (const auto& ai : a_) next -= ai.adjoint() * llt.solve(ai);
      s = 0.5 * (next + next.adjoint());
    }
  }

  double spectral_radius_bound() const {
    double r = a0_.norm();
    for (const auto& ai : a_) r += 2.0 * ai.norm();
    return r;
  }

 private:
  Eigen::Index p_;
  Eigen::MatrixXcd a0_;
  std::vector<Eigen::MatrixXcd> a_;
};

}  // namespace

double fock_min_eig(const HermSElement& e, int depth, double tol) {
  if (depth < 0) throw ShapeError("fock_min_eig: negative depth");
  LevelRecursion rec(e);
  const double bound = rec.spectral_radius_bound() + 1.0;
  double lo = -bound, hi = bound;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (rec.positive_definite(depth, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

int default_fock_depth(int n, std::size_t p) {
  int d = 0;
  while (d < 8 && p * TruncatedFock::dimension(n, d + 1) <= 2048) ++d;
  return d;
}

std::optional<FockWitness> negativity_witness(const HermSElement& e, int max_depth, double tol) {
  LevelRecursion rec(e);
  for (int d = 0; d <= max_depth; ++d) {
    if (rec.positive_definite(d, -tol)) continue;
    TruncatedFock f(e.n, d);
    const auto eig = herm_eig(compress_element(e, f));
    if (eig.eigenvalues.front() >= -tol) continue;
    FockWitness w{d, eig.eigenvalues.front(), {}};
    w.vector.reserve(eig.eigenvectors.rows());
    for (std::size_t r = 0; r < eig.eigenvectors.rows(); ++r) w.vector.push_back(eig.eigenvectors(r, 0));
    return w;
  }
  return std::nullopt;
}

bool verify_fock_witness(const HermSElement& e, const FockWitness& w, double tol) {
  if (w.depth < 0) return false;
  TruncatedFock f(e.n, w.depth);
  const auto h = compress_element(e, f);
  if (w.vector.size() != h.size()) return false;
  double norm2 = 0.0;
  for (const auto& x : w.vector) norm2 += std::norm(x);
  if (std::abs(norm2 - 1.0) > 1e-8) return false;
  cplx q = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j) row += h(i, j) * w.vector[j];
    q += std::conj(w.vector[i]) * row;
  }
  return q.real() < -tol;
}

}  // namespace cuntzpos
