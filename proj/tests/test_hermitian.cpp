#include <cmath>

#include <gtest/gtest.h>

#include "cuntzpos/hermitian.hpp"
#include "cuntzpos/instances.hpp"
#include "oracles.hpp"

using namespace cuntzpos;

namespace {

const cplx I(0.0, 1.0);

HermMatrix random_herm(Rng& rng, std::size_t n) { return hermitian_part(random_gaussian_matrix(rng, n, n)); }

CMatrix diag_matrix(const std::vector<double>& d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return max_abs(a - b); }

}  // namespace

TEST(HermMatrix, RejectsNonHermitian) {
  EXPECT_THROW(HermMatrix(CMatrix{{1.0, 2.0}, {0.0, 1.0}}), ShapeError);
  EXPECT_THROW(HermMatrix(CMatrix(2, 3)), ShapeError);
  EXPECT_NO_THROW(HermMatrix(CMatrix{{1.0, 1.0 + 1e-14}, {1.0, 1.0}}));
}

TEST(HermMatrix, RejectsNonFiniteEntries) {
  EXPECT_THROW(CMatrix(1, 1, {cplx(std::nan(""), 0.0)}), ShapeError);
  EXPECT_THROW(CMatrix(1, 1, {cplx(0.0, INFINITY)}), ShapeError);
}

TEST(HermEig, DiagonalSorted) {
  const auto r = herm_eig(HermMatrix(diag_matrix({3, 1, 2})));
  EXPECT_NEAR(r.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(r.eigenvalues[1], 2.0, 1e-14);
  EXPECT_NEAR(r.eigenvalues[2], 3.0, 1e-14);
}

TEST(HermEig, PauliX) {
  const auto r = herm_eig(HermMatrix(CMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_NEAR(r.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(r.eigenvalues[1], 1.0, 1e-14);
  // Eigenvector for -1 is (1, -1)/sqrt(2) up to phase.
  const cplx ratio = r.eigenvectors(1, 0) / r.eigenvectors(0, 0);
  EXPECT_NEAR(std::abs(ratio + 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r.eigenvectors(0, 0)), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(HermEig, ComplexTwoByTwo) {
  // (2 - l)^2 - 1 = 0
  const auto ev = herm_eigenvalues(HermMatrix(CMatrix{{2.0, I}, {-I, 2.0}}));
  EXPECT_NEAR(ev[0], 1.0, 1e-13);
  EXPECT_NEAR(ev[1], 3.0, 1e-13);
}

TEST(HermEig, ResidualAndUnitarityOnRandomInputs) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto h = random_herm(rng, n);
    const auto r = herm_eig(h);
    const double scale = std::max(1.0, frobenius_norm(h.mat()));
    const CMatrix& v = r.eigenvectors;
    EXPECT_LE(frobenius_norm(h.mat() * v - v * diag_matrix(r.eigenvalues)), 1e-10 * scale);
    EXPECT_LE(frobenius_norm(v.adjoint() * v - CMatrix::identity(n)), 1e-10);
    EXPECT_LE(frobenius_norm(v * diag_matrix(r.eigenvalues) * v.adjoint() - h.mat()), 1e-9 * scale);
    for (std::size_t k = 1; k < n; ++k) EXPECT_LE(r.eigenvalues[k - 1], r.eigenvalues[k]);
  }
}

TEST(HermEig, AgreesWithJacobiOracle) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
    const auto h = random_herm(rng, n);
    const auto lib = herm_eigenvalues(h);
    const auto ref = oracle::jacobi_eigenvalues(h.mat());
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(lib[k], ref[k], 1e-10 * std::max(1.0, frobenius_norm(h.mat())));
  }
}

TEST(MinEig, Examples) {
  EXPECT_NEAR(min_eig(HermMatrix::identity(4)), 1.0, 1e-15);
  EXPECT_NEAR(min_eig(HermMatrix(diag_matrix({-5, 2}))), -5.0, 1e-15);
  EXPECT_NEAR(min_eig(HermMatrix(CMatrix{{1.0, 1.0}, {1.0, 1.0}})), 0.0, 1e-15);
}

TEST(PsdProject, Examples) {
  Rng rng(13);
  const CMatrix g = random_gaussian_matrix(rng, 4, 4);
  const HermMatrix psd = hermitian_part(g * g.adjoint());
  EXPECT_LE(max_abs_diff(psd_project(psd).mat(), psd.mat()), 1e-12);
  EXPECT_LE(max_abs_diff(psd_project(HermMatrix(diag_matrix({1, -2}))).mat(), diag_matrix({1, 0})), 1e-14);
  const auto x = psd_project(HermMatrix(CMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_LE(max_abs_diff(x.mat(), CMatrix{{0.5, 0.5}, {0.5, 0.5}}), 1e-14);
}

TEST(PsdProject, IdempotentNearestAndPsd) {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = random_herm(rng, 1 + static_cast<std::size_t>(trial % 8));
    const auto p1 = psd_project(h);
    EXPECT_GE(min_eig(p1), -1e-12);
    EXPECT_LE(frobenius_norm(psd_project(p1).mat() - p1.mat()), 1e-10);
    // Nearest: h - p1 is negative semidefinite and orthogonal to p1.
    const auto r = h - p1;
    EXPECT_LE(herm_eigenvalues(r).back(), 1e-10);
    EXPECT_NEAR(inner(r.mat(), p1.mat()), 0.0, 1e-9);
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(CMatrix::identity(2), CMatrix::identity(3)), CMatrix::identity(6));
  const CMatrix e10 = CMatrix::unit(2, 1, 0);
  const CMatrix k = kron(e10, CMatrix{{5.0}});
  EXPECT_EQ(k, (CMatrix{{0.0, 0.0}, {5.0, 0.0}}));
  Rng rng(15);
  const auto a = random_gaussian_matrix(rng, 2, 3);
  const auto b = random_gaussian_matrix(rng, 3, 2);
  const auto c = random_gaussian_matrix(rng, 3, 2);
  const auto d = random_gaussian_matrix(rng, 2, 3);
  EXPECT_LE(frobenius_norm(kron(a, b) * kron(c, d) - kron(a * c, b * d)), 1e-12);
}

TEST(Kron, BilinearAndAdjoint) {
  Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_gaussian_matrix(rng, 2, 3);
    const auto a2 = random_gaussian_matrix(rng, 2, 3);
    const auto b = random_gaussian_matrix(rng, 3, 2);
    const cplx s(0.3, -1.2);
    EXPECT_LE(frobenius_norm(kron(a + a2 * s, b) - kron(a, b) - kron(a2, b) * s), 1e-12);
    EXPECT_LE(frobenius_norm(kron(b, a + a2) - kron(b, a) - kron(b, a2)), 1e-12);
    EXPECT_EQ(kron(a, b).adjoint(), kron(a.adjoint(), b.adjoint()));
  }
}

TEST(HermSqrt, Examples) {
  EXPECT_LE(max_abs_diff(herm_sqrt(HermMatrix(diag_matrix({4, 9}))).mat(), diag_matrix({2, 3})), 1e-14);
  EXPECT_LE(max_abs(herm_sqrt(HermMatrix::zeros(3)).mat()), 1e-15);
  const CMatrix proj{{0.5, 0.5}, {0.5, 0.5}};
  EXPECT_LE(max_abs_diff(herm_sqrt(HermMatrix(proj)).mat(), proj), 1e-12);
  EXPECT_THROW(herm_sqrt(HermMatrix(diag_matrix({1, -1e-6}))), std::invalid_argument);
  EXPECT_NO_THROW(herm_sqrt(HermMatrix(diag_matrix({1, -1e-12}))));
}

TEST(HermSqrt, SquaresBackOnRandomPsd) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const auto g = random_gaussian_matrix(rng, n, n);
    const HermMatrix p = hermitian_part(g.adjoint() * g);
    const auto r = herm_sqrt(p);
    EXPECT_GE(min_eig(r), -1e-12);
    EXPECT_LE(frobenius_norm(r.mat() * r.mat() - p.mat()), 1e-9 * std::max(1.0, frobenius_norm(p.mat())));
  }
}

TEST(AssembleBlock, Examples) {
  const CMatrix m = assemble_block<cplx>({{CMatrix{{1.0}}, CMatrix{{2.0}}}, {CMatrix{{3.0}}, CMatrix{{4.0}}}});
  EXPECT_EQ(m, (CMatrix{{1.0, 2.0}, {3.0, 4.0}}));
  const CMatrix d = assemble_block<cplx>({{CMatrix::identity(2), CMatrix(2, 1)}, {CMatrix(1, 2), CMatrix{{7.0}}}});
  EXPECT_EQ(d, (CMatrix{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 7.0}}));
  EXPECT_THROW(assemble_block<cplx>({{CMatrix(2, 2), CMatrix(1, 1)}}), ShapeError);
}

TEST(AssembleBlock, RoundTrip) {
  Rng rng(18);
  const auto a = random_gaussian_matrix(rng, 4, 4);
  const CMatrix back = assemble_block<cplx>(
      {{a.block(0, 0, 2, 2), a.block(0, 2, 2, 2)}, {a.block(2, 0, 2, 2), a.block(2, 2, 2, 2)}});
  EXPECT_EQ(back, a);
}
