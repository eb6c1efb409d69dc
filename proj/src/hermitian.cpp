#include "cuntzpos/hermitian.hpp"

#include <Eigen/Dense>

namespace cuntzpos {

namespace {

using RowMajorXcd = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  return Eigen::Map<const RowMajorXcd>(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                                       static_cast<Eigen::Index>(m.cols()));
}

CMatrix from_eigen(const Eigen::MatrixXcd& e) {
  CMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const HermMatrix& h, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      to_eigen(h.mat()), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw EigenError("Hermitian eigensolver did not converge (size " + std::to_string(h.size()) + ")");
  }
  return es;
}

HermMatrix reassemble(const CMatrix& v, const std::vector<double>& lambda) {
  const std::size_t n = v.rows();
  CMatrix out(n, n);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = v(i, k) * lambda[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(v(j, k));
    }
  }
  return hermitian_part(out);
}

}  // namespace

HermMatrix::HermMatrix(const CMatrix& m) {
  if (!m.square()) throw ShapeError("HermMatrix: not square (" + m.shape_str() + ")");
  const double scale = std::max(1.0, max_abs(m));
  CMatrix sym(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const cplx a = m(i, j);
      const cplx b = std::conj(m(j, i));
      if (std::abs(a - b) > 1e-12 * scale) {
        throw ShapeError("HermMatrix: deviation from self-adjointness at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      sym(i, j) = 0.5 * (a + b);
    }
  }
  m_ = std::move(sym);
}

HermMatrix hermitian_part(const CMatrix& m) {
  if (!m.square()) throw ShapeError("hermitian_part: not square");
  return HermMatrix((m + m.adjoint()) * cplx(0.5));
}

EigResult herm_eig(const HermMatrix& h) {
  if (h.size() == 0) return {};
  auto es = solve(h, true);
  EigResult r;
  r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  r.eigenvectors = from_eigen(es.eigenvectors());
  return r;
}

std::vector<double> herm_eigenvalues(const HermMatrix& h) {
  if (h.size() == 0) return {};
  auto es = solve(h, false);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

double min_eig(const HermMatrix& h) {
  if (h.size() == 0) throw ShapeError("min_eig: empty matrix");
  return herm_eigenvalues(h).front();
}

HermMatrix eig_clip(const HermMatrix& h, double floor) {
  auto r = herm_eig(h);
  for (auto& l : r.eigenvalues) l = std::max(l, floor);
  return reassemble(r.eigenvectors, r.eigenvalues);
}

HermMatrix psd_project(const HermMatrix& h) {
  auto r = herm_eig(h);
  if (r.eigenvalues.empty() || r.eigenvalues.front() >= 0.0) return h;
  for (auto& l : r.eigenvalues) l = std::max(l, 0.0);
  return reassemble(r.eigenvectors, r.eigenvalues);
}

HermMatrix herm_sqrt(const HermMatrix& p) {
  auto r = herm_eig(p);
  for (auto& l : r.eigenvalues) {
    if (l < -1e-10) throw ShapeError("herm_sqrt: matrix is not PSD (eigenvalue " + std::to_string(l) + ")");
    l = std::sqrt(std::max(l, 0.0));
  }
  return reassemble(r.eigenvectors, r.eigenvalues);
}

bool is_psd(const HermMatrix& h, double tol) { return h.size() == 0 || min_eig(h) >= -tol; }

}  // namespace cuntzpos
