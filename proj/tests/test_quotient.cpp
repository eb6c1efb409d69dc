#include <functional>

#include <gtest/gtest.h>

#include "cuntzpos/instances.hpp"
#include "cuntzpos/quotient.hpp"
#include "oracles.hpp"

using namespace cuntzpos;

namespace {

using TC = TCElement<cplx>;

std::vector<std::vector<CMatrix>> map_images(int k, const std::function<CMatrix(std::size_t, std::size_t)>& phi) {
  std::vector<std::vector<CMatrix>> grid(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j) grid[i].push_back(phi(i, j));
  return grid;
}

ENElement random_en(Rng& rng, int n, std::size_t p) {
  auto x = ENElement::zeros(n, p);
  x.a00 = random_gaussian_matrix(rng, p, p);
  x.bdiag = random_gaussian_matrix(rng, p, p);
  for (int i = 0; i < n; ++i) {
    x.a0i[static_cast<std::size_t>(i)] = random_gaussian_matrix(rng, p, p);
    x.ai0[static_cast<std::size_t>(i)] = random_gaussian_matrix(rng, p, p);
  }
  return x;
}

TC to_words(const SElement& s) {
  TC out = TC::term(s.n, {{}, {}}, s.identity_coeff);
  for (int i = 1; i <= s.n; ++i) {
    out += TC::term(s.n, {{i}, {}}, s.gen_coeff[static_cast<std::size_t>(i - 1)]);
    out += TC::term(s.n, {{}, {i}}, s.gen_adj_coeff[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

}  // namespace

TEST(ENElement, RealizedLayout) {
  Rng rng(51);
  const auto x = random_en(rng, 3, 2);
  const CMatrix m = x.realize();
  ASSERT_EQ(m.rows(), 8u);
  EXPECT_EQ(m.block(0, 0, 2, 2), x.a00);
  for (std::size_t i = 1; i <= 3; ++i) {
    EXPECT_EQ(m.block(0, 2 * i, 2, 2), x.a0i[i - 1]);
    EXPECT_EQ(m.block(2 * i, 0, 2, 2), x.ai0[i - 1]);
    for (std::size_t j = 1; j <= 3; ++j) EXPECT_EQ(m.block(2 * i, 2 * j, 2, 2), i == j ? x.bdiag : CMatrix(2, 2));
  }
}

TEST(PsiApply, KernelAndGenerators) {
  for (int n = 2; n <= 4; ++n) {
    auto j = ENElement::zeros(n, 1);
    j.a00 = CMatrix::identity(1);
    j.bdiag = -CMatrix::identity(1);
    EXPECT_TRUE(psi_apply(j).is_zero());

    auto s1 = ENElement::zeros(n, 1);
    s1.ai0[0] = CMatrix{{2.0}};
    const auto img = psi_apply(s1);
    EXPECT_EQ(img.gen_coeff[0], CMatrix{{1.0}});
    EXPECT_EQ(img.identity_coeff, CMatrix(1, 1));
    for (int i = 1; i < n; ++i) EXPECT_EQ(img.gen_coeff[static_cast<std::size_t>(i)], CMatrix(1, 1));

    auto unit = ENElement::zeros(n, 1);
    unit.a00 = CMatrix::identity(1);
    unit.bdiag = CMatrix::identity(1);
    EXPECT_EQ(psi_apply(unit).identity_coeff, CMatrix::identity(1));
  }
}

TEST(PsiApply, KernelIsExactlyTheSpanOfJ) {
  Rng rng(52);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = u(rng);
    auto x = ENElement::zeros(2, 1);
    x.a00 = CMatrix{{t}};
    x.bdiag = CMatrix{{-t}};
    EXPECT_TRUE(psi_apply(x).is_zero());
    // Any perturbation off the line leaves the kernel.
    auto y = x;
    y.bdiag = CMatrix{{-t + 0.5}};
    EXPECT_FALSE(psi_apply(y).is_zero());
    auto z = x;
    z.a0i[1] = CMatrix{{cplx(0, 1)}};
    EXPECT_FALSE(psi_apply(z).is_zero());
  }
}

TEST(PsiApply, MatchesWordExpansionOfRStarR) {
  // psi(x) = sum_ij x_ij (R^*R)_ij with (R^*R)_00 = I/2, (R^*R)_0j = S_j^*/2,
  // (R^*R)_i0 = S_i/2, (R^*R)_ij = S_i S_j^*/2. The diagonal part reduces via
  // sum_i S_i S_i^* = I, which the word engine does not apply by itself.
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    const std::size_t p = 1 + static_cast<std::size_t>(trial % 2);
    const auto x = random_en(rng, n, p);
    const cplx half(0.5);
    TC words = TC::term(n, {{}, {}}, x.a00 * half);
    TC range_sum(n, p);
    for (int i = 1; i <= n; ++i) {
      const auto k = static_cast<std::size_t>(i - 1);
      words += TC::term(n, {{}, {i}}, x.a0i[k] * half);
      words += TC::term(n, {{i}, {}}, x.ai0[k] * half);
      words += TC::term(n, {{i}, {i}}, x.bdiag * half);
      range_sum += TC::term(n, {{i}, {i}}, x.bdiag * half);
    }
    const TC reduced = words - range_sum + TC::term(n, {{}, {}}, x.bdiag * half);
    const TC lib = to_words(psi_apply(x));
    EXPECT_LE(max_abs(reduced.coefficient({{}, {}}) - lib.coefficient({{}, {}})), 1e-15);
    for (const auto& [t, c] : reduced.terms()) EXPECT_LE(max_abs(c - lib.coefficient(t)), 1e-15);
    for (const auto& [t, c] : lib.terms()) EXPECT_LE(max_abs(c - reduced.coefficient(t)), 1e-15);
  }
}

TEST(Choi, IdentityTransposeAndDiagonalMaps) {
  const auto id = map_images(2, [](std::size_t i, std::size_t j) { return CMatrix::unit(2, i, j); });
  const auto chi = choi_matrix(id);
  const auto ev = oracle::jacobi_eigenvalues(chi);
  EXPECT_NEAR(ev[3], 2.0, 1e-12);
  EXPECT_NEAR(ev[0], 0.0, 1e-12);
  EXPECT_TRUE(is_cp(id));

  const auto tr = map_images(2, [](std::size_t i, std::size_t j) { return CMatrix::unit(2, j, i); });
  EXPECT_NEAR(choi_min_eig(tr), -1.0, 1e-12);
  EXPECT_FALSE(is_cp(tr));

  const auto diag = map_images(3, [](std::size_t i, std::size_t j) {
    return i == j ? CMatrix::identity(2) : CMatrix(2, 2);
  });
  EXPECT_TRUE(is_cp(diag));
  EXPECT_EQ(choi_matrix(diag), CMatrix::identity(6));
}

TEST(PsiChoiCheck, NonNegativeOnTruncations) {
  for (int n = 2; n <= 3; ++n)
    for (int d = 0; d <= 3; ++d) EXPECT_GE(psi_choi_check(TruncatedFock(n, d)), -1e-10) << n << " " << d;
  // Depth 0: every S_i vanishes, leaving [[1/2, 0], [0, 0]] (+) 0.
  EXPECT_NEAR(psi_choi_check(TruncatedFock(2, 0)), 0.0, 1e-15);
}

TEST(KernelPositivity, OnlyZeroIsPositive) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(kernel_positivity_check(n));
}

TEST(RowContractionBase, BothNormalizations) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = row_contraction_base_check(n);
    EXPECT_TRUE(r.sums_match);
    ASSERT_EQ(r.summand_min_eigs.size(), static_cast<std::size_t>(n));
    for (double v : r.summand_min_eigs) EXPECT_GE(v, -1e-12);
    EXPECT_GE(r.total_min_eig, -1e-12);
    EXPECT_GE(r.doubled_total_min_eig, -1e-12);
    EXPECT_TRUE(r.passed());
  }
}
