#include "cuntzpos/element.hpp"

namespace cuntzpos {

HermSElement::HermSElement(HermMatrix a0_, std::vector<CMatrix> a_)
    : n(static_cast<int>(a_.size())), p(a0_.size()), a0(std::move(a0_)), a(std::move(a_)) {
  if (p < 1) throw ShapeError("HermSElement: p must be >= 1");
  if (n < 1) throw ShapeError("HermSElement: need at least one generator coefficient");
  for (const auto& m : a) {
    if (m.rows() != p || m.cols() != p) {
      throw ShapeError("HermSElement: generator coefficient is " + m.shape_str() + ", expected " +
                       std::to_string(p) + "x" + std::to_string(p));
    }
  }
}

HermSElement HermSElement::scalar(double a0, const std::vector<cplx>& alpha) {
  std::vector<CMatrix> a;
  a.reserve(alpha.size());
  for (const auto& x : alpha) a.emplace_back(1, 1, std::vector<cplx>{x});
  return {HermMatrix(CMatrix(1, 1, {cplx(a0)})), std::move(a)};
}

HermSElement HermSElement::padded(int m) const {
  if (m < n) throw ShapeError("padded: target alphabet smaller than source");
  auto out = *this;
  out.a.resize(static_cast<std::size_t>(m), CMatrix(p, p));
  out.n = m;
  return out;
}

HermSElement HermSElement::rho(int i) const {
  if (i < 1 || i > n) throw ShapeError("rho: letter out of range");
  auto out = *this;
  for (int k = 1; k <= n; ++k) {
    if (k != i) out.a[static_cast<std::size_t>(k - 1)] = CMatrix(p, p);
  }
  return out;
}

HermSElement HermSElement::scaled(double t) const {
  auto out = *this;
  out.a0 = t * a0;
  for (auto& m : out.a) m *= cplx(t);
  return out;
}

bool SElement::is_zero() const {
  if (!identity_coeff.is_zero()) return false;
  for (const auto& m : gen_coeff)
    if (!m.is_zero()) return false;
  for (const auto& m : gen_adj_coeff)
    if (!m.is_zero()) return false;
  return true;
}

TCElement<cplx> from_s_element(const HermSElement& e) {
  auto x = TCElement<cplx>::term(e.n, NFTerm{}, e.a0.mat());
  for (int i = 1; i <= e.n; ++i) {
    const auto& ai = e.a[static_cast<std::size_t>(i - 1)];
    x.add(NFTerm{{i}, {}}, ai);
    x.add(NFTerm{{}, {i}}, ai.adjoint());
  }
  return x;
}

HermSElement to_s_element(const TCElement<cplx>& x) {
  std::vector<CMatrix> a(static_cast<std::size_t>(x.n()), CMatrix(x.p(), x.p()));
  for (const auto& [t, c] : x.terms()) {
    if (t.max_length() > 1 || (!t.mu.empty() && !t.nu.empty())) {
      throw ShapeError("to_s_element: term " + render_term(t) + " is outside span{I, S_i, S_i^*}");
    }
  }
  for (int i = 1; i <= x.n(); ++i) {
    const auto gen = x.coefficient(NFTerm{{i}, {}});
    const auto adj = x.coefficient(NFTerm{{}, {i}});
    if (max_abs(gen.adjoint() - adj) > 1e-12 * std::max(1.0, max_abs(gen))) {
      throw ShapeError("to_s_element: element is not self-adjoint");
    }
    a[static_cast<std::size_t>(i - 1)] = gen;
  }
  return {HermMatrix(x.coefficient(NFTerm{})), std::move(a)};
}

}  // namespace cuntzpos
