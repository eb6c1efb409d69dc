#include "cuntzpos/quotient.hpp"

namespace cuntzpos {

ENElement ENElement::zeros(int n, std::size_t p) {
  ENElement x;
  x.n = n;
  x.p = p;
  x.a00 = CMatrix(p, p);
  x.a0i.assign(static_cast<std::size_t>(n), CMatrix(p, p));
  x.ai0.assign(static_cast<std::size_t>(n), CMatrix(p, p));
  x.bdiag = CMatrix(p, p);
  return x;
}

CMatrix ENElement::realize() const {
  const std::size_t blocks = static_cast<std::size_t>(n) + 1;
  CMatrix out(blocks * p, blocks * p);
  out.set_block(0, 0, a00);
  for (std::size_t k = 1; k < blocks; ++k) {
    out.set_block(0, k * p, a0i[k - 1]);
    out.set_block(k * p, 0, ai0[k - 1]);
    out.set_block(k * p, k * p, bdiag);
  }
  return out;
}

SElement psi_apply(const ENElement& x) {
  if (x.a0i.size() != static_cast<std::size_t>(x.n) || x.ai0.size() != static_cast<std::size_t>(x.n)) {
    throw ShapeError("psi_apply: ENElement has inconsistent generator count");
  }
  const cplx half(0.5);
  SElement s;
  s.n = x.n;
  s.p = x.p;
  // psi(E_00) = I/2 and psi(sum E_ii) = sum S_i S_i^* / 2 = I/2.
  s.identity_coeff = (x.a00 + x.bdiag) * half;
  for (int i = 0; i < x.n; ++i) {
    s.gen_coeff.push_back(x.ai0[static_cast<std::size_t>(i)] * half);
    s.gen_adj_coeff.push_back(x.a0i[static_cast<std::size_t>(i)] * half);
  }
  return s;
}

CMatrix choi_matrix(const std::vector<std::vector<CMatrix>>& images) {
  if (images.empty() || images.size() != images.front().size()) {
    throw ShapeError("choi_matrix: images must form a square grid");
  }
  const std::size_t k = images[0][0].rows();
  for (const auto& row : images)
    for (const auto& b : row)
      if (b.rows() != k || b.cols() != k) throw ShapeError("choi_matrix: images must share one square shape");
  return assemble_block(images);
}

double choi_min_eig(const std::vector<std::vector<CMatrix>>& images) {
  return min_eig(HermMatrix(choi_matrix(images)));
}

bool is_cp(const std::vector<std::vector<CMatrix>>& images, double tol) { return choi_min_eig(images) >= -tol; }

double psi_choi_check(const TruncatedFock& f) {
  const int n = f.n();
  const std::size_t dim = f.dim();
  std::vector<CMatrix> s;
  s.reserve(static_cast<std::size_t>(n) + 1);
  s.push_back(CMatrix::identity(dim));  // R's first entry is I, then S_i^*
  for (int i = 1; i <= n; ++i) s.push_back(creation_matrix(i, f).to_dense());
  // Block (i, j) = s_i s_j^* / 2 with s_0 = I.
  std::vector<std::vector<CMatrix>> grid(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) grid[i].push_back(s[i] * s[j].adjoint() * cplx(0.5));
  return min_eig(HermMatrix(assemble_block(grid)));
}

bool kernel_positivity_check(int n) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  CMatrix j = CMatrix::unit(dim, 0, 0);
  for (std::size_t i = 1; i < dim; ++i) j(i, i) = cplx(-1.0);
  for (double t : {-1.0, 0.0, 1.0}) {
    const bool psd = is_psd(HermMatrix(j * cplx(t)), 0.0);
    if (psd != (t == 0.0)) return false;
  }
  return true;
}

bool BaseBlockCheck::passed(double tol) const {
  if (!sums_match || total_min_eig < -tol || doubled_total_min_eig < -tol) return false;
  for (double v : summand_min_eigs)
    if (v < -tol) return false;
  return true;
}

BaseBlockCheck row_contraction_base_check(int n) {
  if (n < 1) throw ShapeError("row_contraction_base_check: n must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  auto e = [&](std::size_t i, std::size_t j) { return CMatrix::unit(dim, i, j); };

  std::vector<std::vector<CMatrix>> grid(dim, std::vector<CMatrix>(dim, CMatrix(dim, dim)));
  for (std::size_t i = 1; i < dim; ++i) grid[0][0] += e(i, i);
  for (std::size_t k = 1; k < dim; ++k) {
    grid[0][k] = e(k, 0);
    grid[k][0] = e(0, k);
    grid[k][k] = e(0, 0);
  }
  const CMatrix total = assemble_block(grid);

  BaseBlockCheck out;
  out.total_min_eig = min_eig(HermMatrix(total));
  out.doubled_total_min_eig = min_eig(HermMatrix(total * cplx(2.0)));

  CMatrix sum(total.rows(), total.cols());
  for (std::size_t k = 1; k < dim; ++k) {
    std::vector<std::vector<CMatrix>> g(dim, std::vector<CMatrix>(dim, CMatrix(dim, dim)));
    g[0][0] = e(k, k);
    g[0][k] = e(k, 0);
    g[k][0] = e(0, k);
    g[k][k] = e(0, 0);
    const CMatrix summand = assemble_block(g);
    out.summand_min_eigs.push_back(min_eig(HermMatrix(summand)));
    sum += summand;
  }
  out.sums_match = (sum == total);
  return out;
}

}  // namespace cuntzpos
