#include "cuntzpos/dilation.hpp"

#include "cuntzpos/fock.hpp"

namespace cuntzpos {

RowContraction::RowContraction(std::vector<CMatrix> a) : a_(std::move(a)) {
  if (a_.empty()) throw ShapeError("RowContraction: need at least one operator");
  p_ = a_.front().rows();
  CMatrix gram = CMatrix::identity(p_);
  for (const auto& m : a_) {
    if (m.rows() != p_ || m.cols() != p_) throw ShapeError("RowContraction: operators must share one square shape");
    gram -= m * m.adjoint();
  }
  const double lo = min_eig(hermitian_part(gram));
  if (lo < -1e-10) {
    throw NotContractionError("not a row contraction: min eig of I - sum A_i A_i^* is " + std::to_string(lo));
  }
}

CMatrix RowContraction::row_operator() const {
  std::vector<std::vector<CMatrix>> row(1, a_);
  return assemble_block(row);
}

DilationResult dilate(const RowContraction& a, int depth) {
  if (depth < 0) throw ShapeError("dilate: negative depth");
  const int n = a.n();
  const std::size_t p = a.p();
  const std::size_t q = static_cast<std::size_t>(n) * p;
  const TruncatedFock fock(n, depth);

  const CMatrix r = a.row_operator();
  const HermMatrix defect = herm_sqrt(hermitian_part(CMatrix::identity(q) - r.adjoint() * r));

  DilationResult out;
  out.p = p;
  out.defect_dim = q;
  out.fock_dim = fock.dim();
  const std::size_t interior_nodes = fock.count_shorter_than(depth);
  out.interior_dim = p + interior_nodes * q;
  const std::size_t dim = out.dim();
  auto fock_index = [&](std::size_t node, std::size_t k) { return p + node * q + k; };

  for (int i = 1; i <= n; ++i) {
    CMatrix v(dim, dim);
    const auto& ai = a[static_cast<std::size_t>(i - 1)];
    const std::size_t off = static_cast<std::size_t>(i - 1) * p;
    for (std::size_t c = 0; c < p; ++c) {
      for (std::size_t row = 0; row < p; ++row) v(row, c) = ai(row, c);
      for (std::size_t k = 0; k < q; ++k) v(fock_index(0, k), c) = defect(k, off + c);
    }
    for (std::size_t node = 0; node < interior_nodes; ++node) {
      Word w{i};
      w.insert(w.end(), fock.basis()[node].begin(), fock.basis()[node].end());
      const std::size_t target = *fock.index(w);
      for (std::size_t k = 0; k < q; ++k) v(fock_index(target, k), fock_index(node, k)) = 1.0;
    }
    out.v.push_back(std::move(v));
  }

  for (int i = 0; i < n; ++i) {
    const CMatrix comp = out.v[static_cast<std::size_t>(i)].block(0, 0, p, p);
    out.compression_residual =
        std::max(out.compression_residual, frobenius_norm(comp - a[static_cast<std::size_t>(i)]));
  }
  // The interior is a leading index range.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CMatrix g = (out.v[static_cast<std::size_t>(i)].adjoint() * out.v[static_cast<std::size_t>(j)])
                      .block(0, 0, out.interior_dim, out.interior_dim);
      if (i == j) g -= CMatrix::identity(out.interior_dim);
      out.isometry_residual = std::max(out.isometry_residual, frobenius_norm(g));
    }
  }
  return out;
}

HermMatrix ucp_evaluate(const HermSElement& e, const RowContraction& b) {
  if (e.n != b.n()) throw ShapeError("ucp_evaluate: generator count mismatch");
  const std::size_t q = b.p();
  CMatrix out = kron(e.a0.mat(), CMatrix::identity(q));
  for (std::size_t k = 0; k < e.a.size(); ++k) {
    const CMatrix term = kron(e.a[k], b[k]);
    out += term;
    out += term.adjoint();
  }
  return HermMatrix(out);
}

std::vector<CMatrix> block_dilation_build(const std::vector<CMatrix>& t, const std::vector<CMatrix>& x,
                                          const std::vector<CMatrix>& y) {
  if (t.size() != x.size() || t.size() != y.size() || t.empty()) {
    throw ShapeError("block_dilation_build: T, X, Y must have the same nonzero length");
  }
  const std::size_t d = t.front().rows();
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (const auto* m : {&t[i], &x[i], &y[i]}) {
      if (m->rows() != d || m->cols() != d) throw ShapeError("block_dilation_build: operators must share one square shape");
    }
    out.push_back(assemble_block<cplx>({{t[i], x[i]}, {CMatrix(d, d), y[i]}}));
  }
  return out;
}

BlockDilationResiduals block_dilation_residuals(const std::vector<CMatrix>& tilde, const CMatrix& interior) {
  if (tilde.empty()) throw ShapeError("block_dilation_residuals: no operators");
  const std::size_t dim = tilde.front().rows();
  if (interior.rows() != dim || interior.cols() != dim) throw ShapeError("block_dilation_residuals: projection size");
  const CMatrix id = CMatrix::identity(dim);
  BlockDilationResiduals r;
  CMatrix range_sum(dim, dim);
  for (const auto& t : tilde) {
    r.isometry = std::max(r.isometry, frobenius_norm(interior * (t.adjoint() * t - id) * interior));
    range_sum += t * t.adjoint();
  }
  r.cuntz = frobenius_norm(interior * (range_sum - id) * interior);
  return r;
}

std::vector<CMatrix> truncated_cuntz_family(int n, std::size_t dim) {
  std::vector<CMatrix> out;
  for (int i = 1; i <= n; ++i) {
    CMatrix c(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const std::size_t target = static_cast<std::size_t>(n) * k + static_cast<std::size_t>(i - 1);
      if (target < dim) c(target, k) = 1.0;
    }
    out.push_back(std::move(c));
  }
  return out;
}

FockBlockDilation fock_block_dilation(int n, int depth) {
  const TruncatedFock fock(n, depth);
  const std::size_t dim = fock.dim();
  FockBlockDilation out;
  for (int i = 1; i <= n; ++i) out.t.push_back(creation_matrix(i, fock).to_dense());

  // Projection onto ran(I - sum T_i T_i^*), spectrally.
  CMatrix gap = CMatrix::identity(dim);
  for (const auto& t : out.t) gap -= t * t.adjoint();
  const auto eig = herm_eig(hermitian_part(gap));
  CMatrix proj(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (eig.eigenvalues[k] < 0.5) continue;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) proj(a, b) += eig.eigenvectors(a, k) * std::conj(eig.eigenvectors(b, k));
  }
  out.x.assign(static_cast<std::size_t>(n), CMatrix(dim, dim));
  out.x[0] = proj;

  // W: e_j -> e_{j-1}; its initial space is the span of the nonempty words.
  CMatrix w(dim, dim);
  for (std::size_t j = 1; j < dim; ++j) w(j - 1, j) = 1.0;
  out.y = truncated_cuntz_family(n, dim);
  out.y[0] = out.y[0] * w;

  out.tilde = block_dilation_build(out.t, out.x, out.y);

  out.interior = CMatrix(2 * dim, 2 * dim);
  const std::size_t short_words = fock.count_shorter_than(depth);
  for (std::size_t k = 0; k < short_words; ++k) out.interior(k, k) = 1.0;
  for (std::size_t k = 0; k < dim; ++k) {
    if (static_cast<std::size_t>(n) * k + static_cast<std::size_t>(n) - 1 < dim) out.interior(dim + k, dim + k) = 1.0;
  }
  return out;
}

}  // namespace cuntzpos
