#pragma once

#include "mp_real.hpp"

namespace zdensity {

using mp::Real;

// Complex number over Real. std::complex is unspecified for non-arithmetic
// element types, so the handful of operations the zeta engine needs live here.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}

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
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
  }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator*(const Real& a, const Complex& b) { return b * a; }
inline Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = mp::sqr(b.re) + mp::sqr(b.im);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real abs(const Complex& z) { return mp::hypot(z.re, z.im); }

// exp(-s * log_n) for s = sigma + i t, i.e. n^{-s} given log n.
inline Complex neg_power(const Real& log_n, const Complex& s) {
  Real mag = mp::exp(-(s.re * log_n));
  auto [sn, cs] = mp::sin_cos(s.im * log_n);
  return {mag * cs, -(mag * sn)};
}

inline Real neg_power(const Real& log_n, const Real& s) { return mp::exp(-(s * log_n)); }

}  // namespace zdensity
