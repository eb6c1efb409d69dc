#include "cuntzpos/instances.hpp"

#include <cmath>

namespace cuntzpos {

std::uint64_t derive_seed(std::uint64_t global, std::uint64_t index) {
  std::uint64_t z = global + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CMatrix random_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(rows, cols);
  for (auto& x : m.data()) x = cplx(g(rng), g(rng));
  return m;
}

HermSElement random_scalar_instance(Rng& rng, int n, double a0_lo, double a0_hi) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g(0.0, 1.0);
  const double a0 = a0_lo + (a0_hi - a0_lo) * u(rng);
  const double radius = a0 * u(rng);
  std::vector<cplx> alpha(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  for (auto& x : alpha) {
    x = cplx(g(rng), g(rng));
    norm2 += std::norm(x);
  }
  for (auto& x : alpha) x *= radius / std::sqrt(norm2);
  return HermSElement::scalar(a0, alpha);
}

HermSElement random_gaussian_instance(Rng& rng, int n, std::size_t p) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const CMatrix g = random_gaussian_matrix(rng, p, p);
  const HermMatrix a0 = hermitian_part(g * g.adjoint() * cplx(1.0 / static_cast<double>(p)));
  const double s = 0.5 * u(rng) / std::sqrt(static_cast<double>(n));
  std::vector<CMatrix> a;
  for (int i = 0; i < n; ++i) a.push_back(random_gaussian_matrix(rng, p, p) * cplx(s));
  return {a0, std::move(a)};
}

RowContraction random_row_contraction(Rng& rng, int n, std::size_t p) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<CMatrix> a;
  CMatrix gram(p, p);
  for (int i = 0; i < n; ++i) {
    a.push_back(random_gaussian_matrix(rng, p, p));
    gram += a.back() * a.back().adjoint();
  }
  const double norm = std::sqrt(herm_eigenvalues(hermitian_part(gram)).back());
  const double c = u(rng) < 0.2 ? 1.0 : std::max(u(rng), 1e-3);
  // Rounding can push a norm-one row a hair past 1; shave it.
  const double scale = c * (1.0 - 1e-13) / norm;
  for (auto& m : a) m *= cplx(scale);
  return RowContraction(std::move(a));
}

Word random_word(Rng& rng, int n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, n);
  Word w(len(rng));
  for (auto& l : w) l = letter(rng);
  return w;
}

TCElement<cplx> random_tc_element(Rng& rng, int n, std::size_t p, std::size_t max_len, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  TCElement<cplx> x(n, p);
  const std::size_t k = count(rng);
  for (std::size_t t = 0; t < k; ++t) {
    NFTerm term{random_word(rng, n, max_len), random_word(rng, n, max_len)};
    x.add(std::move(term), random_gaussian_matrix(rng, p, p));
  }
  return x;
}

TCElement<GaussRational> random_tc_element_exact(Rng& rng, int n, std::size_t p, std::size_t max_len,
                                                 std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  TCElement<GaussRational> x(n, p);
  const std::size_t k = count(rng);
  for (std::size_t t = 0; t < k; ++t) {
    NFTerm term{random_word(rng, n, max_len), random_word(rng, n, max_len)};
    Matrix<GaussRational> c(p, p);
    for (auto& v : c.data()) v = GaussRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    x.add(std::move(term), c);
  }
  return x;
}

}  // namespace cuntzpos
