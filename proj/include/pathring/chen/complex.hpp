#pragma once

#include <cmath>
#include <string>

#include "pathring/rational.hpp"

namespace pathring::chen {

/// Minimal complex arithmetic over any real type with the usual operators
/// and an ADL-visible sqrt/atan2/cos/sin (double, boost mpfr numbers).
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(const Real& s, const Complex& a) { return Complex(s * a.re, s * a.im); }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  Real norm() const { return re * re + im * im; }
  Real abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
  Real arg() const {
    using std::atan2;
    return atan2(im, re);
  }
  Complex conj() const { return Complex(re, -im); }
};

template <class Real>
Complex<Real> polar(const Real& r, const Real& theta) {
  using std::cos;
  using std::sin;
  return Complex<Real>(r * cos(theta), r * sin(theta));
}

template <class Real>
Real from_rational(const Rational& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return q.to_double();
  } else {
    return Real(q.numerator().get_str().c_str()) / Real(q.denominator().get_str().c_str());
  }
}

/// A point with exact rational coordinates; paths and punctures are stored
/// this way so endpoint matching is exact.
struct ExactPoint {
  Rational re;
  Rational im;
  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;

  template <class Real>
  Complex<Real> as() const {
    return Complex<Real>(from_rational<Real>(re), from_rational<Real>(im));
  }
  std::string str() const { return "(" + re.str() + ", " + im.str() + ")"; }
};

}  // namespace pathring::chen
