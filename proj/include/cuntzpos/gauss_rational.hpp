#pragma once

#include <complex>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace cuntzpos {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number re + i*im with rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  friend GaussRational conj(const GaussRational& a) { return {a.re_, -a.im_}; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& a) {
    return os << "(" << a.re_ << "," << a.im_ << ")";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace cuntzpos
