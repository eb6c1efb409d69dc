#pragma once

// Exact arithmetic in the span of Toeplitz-Cuntz words S_mu S_nu^*.
//
// Only the isometry relations S_i^* S_j = delta_ij I are imposed; the Cuntz
// fullness relation sum_i S_i S_i^* = I is not, so normal forms are unique.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuntzpos/matrix.hpp"

namespace cuntzpos {

/// Finite word over the alphabet {1, ..., n}. Letters are stored 1-based.
using Word = std::vector<int>;

/// The word S_mu S_nu^*.
struct NFTerm {
  Word mu;
  Word nu;

  std::size_t max_length() const { return std::max(mu.size(), nu.size()); }
};

/// Canonical order: (|mu|, mu, |nu|, nu).
inline bool operator<(const NFTerm& a, const NFTerm& b) {
  if (a.mu.size() != b.mu.size()) return a.mu.size() < b.mu.size();
  if (a.mu != b.mu) return a.mu < b.mu;
  if (a.nu.size() != b.nu.size()) return a.nu.size() < b.nu.size();
  return a.nu < b.nu;
}
inline bool operator==(const NFTerm& a, const NFTerm& b) { return a.mu == b.mu && a.nu == b.nu; }

inline bool is_prefix(const Word& prefix, const Word& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

inline Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// (S_mu S_nu^*)(S_alpha S_beta^*) in normal form, or nullopt when it vanishes.
inline std::optional<NFTerm> mul_terms(const NFTerm& t1, const NFTerm& t2) {
  const Word& nu = t1.nu;
  const Word& alpha = t2.mu;
  if (is_prefix(nu, alpha)) {
    // S_nu^* S_alpha = S_gamma with alpha = nu.gamma
    Word gamma(alpha.begin() + static_cast<std::ptrdiff_t>(nu.size()), alpha.end());
    return NFTerm{concat(t1.mu, gamma), t2.nu};
  }
  if (is_prefix(alpha, nu)) {
    // S_nu^* S_alpha = S_gamma^* with nu = alpha.gamma
    Word gamma(nu.begin() + static_cast<std::ptrdiff_t>(alpha.size()), nu.end());
    return NFTerm{t1.mu, concat(t2.nu, gamma)};
  }
  return std::nullopt;
}

inline void check_word(const Word& w, int n) {
  for (int l : w) {
    if (l < 1 || l > n) throw ShapeError("letter " + std::to_string(l) + " outside alphabet 1.." + std::to_string(n));
  }
}

/// Finite combination sum_t C_t (x) t with p x p coefficient matrices C_t.
/// Zero coefficients are never stored.
template <class T>
class TCElement {
 public:
  using Coeff = Matrix<T>;
  using TermMap = std::map<NFTerm, Coeff>;

  TCElement(int n, std::size_t p) : n_(n), p_(p) {
    if (n < 1) throw ShapeError("TCElement: alphabet size must be >= 1");
    if (p < 1) throw ShapeError("TCElement: coefficient size must be >= 1");
  }

  static TCElement identity(int n, std::size_t p) { return term(n, {{}, {}}, Coeff::identity(p)); }

  static TCElement term(int n, NFTerm t, Coeff c) {
    TCElement e(n, c.rows());
    e.add(std::move(t), c);
    return e;
  }

  /// Scalar (p = 1) single term.
  static TCElement scalar_term(int n, NFTerm t, T c) { return term(n, std::move(t), Coeff(1, 1, {c})); }

  /// Generator S_i tensored with the p x p identity.
  static TCElement generator(int n, std::size_t p, int i) { return term(n, {{i}, {}}, Coeff::identity(p)); }
  static TCElement generator_adjoint(int n, std::size_t p, int i) {
    return term(n, {{}, {i}}, Coeff::identity(p));
  }

  int n() const { return n_; }
  std::size_t p() const { return p_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c (x) t, dropping the term if the sum cancels.
  void add(NFTerm t, const Coeff& c) {
    check_word(t.mu, n_);
    check_word(t.nu, n_);
    if (c.rows() != p_ || c.cols() != p_) {
      throw ShapeError("TCElement: coefficient " + c.shape_str() + " does not match p=" + std::to_string(p_));
    }
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(std::move(t), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Coefficient of t (zero matrix when absent).
  Coeff coefficient(const NFTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Coeff(p_, p_) : it->second;
  }

  std::size_t max_word_length() const {
    std::size_t m = 0;
    for (const auto& [t, c] : terms_) m = std::max(m, t.max_length());
    return m;
  }

  TCElement& operator+=(const TCElement& o) {
    require_compatible(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  TCElement& operator-=(const TCElement& o) {
    require_compatible(o);
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  friend TCElement operator+(TCElement a, const TCElement& b) { return a += b; }
  friend TCElement operator-(TCElement a, const TCElement& b) { return a -= b; }

  friend TCElement operator*(const T& s, const TCElement& x) {
    TCElement out(x.n_, x.p_);
    for (const auto& [t, c] : x.terms_) out.add(t, c * s);
    return out;
  }

  friend bool operator==(const TCElement& a, const TCElement& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  void require_compatible(const TCElement& o) const {
    if (n_ != o.n_ || p_ != o.p_) {
      throw ShapeError("TCElement: incompatible operands (n=" + std::to_string(n_) + ",p=" + std::to_string(p_) +
                       " vs n=" + std::to_string(o.n_) + ",p=" + std::to_string(o.p_) + ")");
    }
  }

 private:
  int n_;
  std::size_t p_;
  TermMap terms_;
};

template <class T>
TCElement<T> mul(const TCElement<T>& x, const TCElement<T>& y) {
  x.require_compatible(y);
  TCElement<T> out(x.n(), x.p());
  for (const auto& [t1, c1] : x.terms()) {
    for (const auto& [t2, c2] : y.terms()) {
      if (auto t = mul_terms(t1, t2)) out.add(std::move(*t), c1 * c2);
    }
  }
  return out;
}

template <class T>
TCElement<T> adjoint(const TCElement<T>& x) {
  TCElement<T> out(x.n(), x.p());
  for (const auto& [t, c] : x.terms()) out.add(NFTerm{t.nu, t.mu}, c.adjoint());
  return out;
}

/// X -> S_i^* X S_i.
template <class T>
TCElement<T> rho_compress(const TCElement<T>& x, int i) {
  const auto s = TCElement<T>::generator(x.n(), x.p(), i);
  const auto s_adj = TCElement<T>::generator_adjoint(x.n(), x.p(), i);
  return mul(mul(s_adj, x), s);
}

/// Text form of a single word: "I", "S1", "S1.S2*", "S1.S3*.S2*".
std::string render_term(const NFTerm& t);

/// Text form of a scalar (p = 1) element, terms in canonical order.
std::string render(const TCElement<cplx>& x);

/// Parses a scalar element such as "2*S1.S2* + (0,1)*S2 - I" over n letters.
/// Products of arbitrary factors are reduced to normal form.
TCElement<cplx> parse_element(const std::string& text, int n);

}  // namespace cuntzpos
