#include "cuntzpos/matrix.hpp"

namespace cuntzpos {

double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs(const CMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s = std::max(s, std::abs(x));
  return s;
}

double inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("inner: " + a.shape_str() + " vs " + b.shape_str());
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) s += std::real(std::conj(a.data()[k]) * b.data()[k]);
  return s;
}

}  // namespace cuntzpos
