#pragma once

#include "chatelet/bigint.hpp"

#include <ostream>
#include <stdexcept>

namespace chatelet {

/// An element re + im*i of Z[i].
struct GaussianInteger {
  Int re{0};
  Int im{0};

  GaussianInteger() = default;
  GaussianInteger(Int r, Int i = Int(0)) : re(std::move(r)), im(std::move(i)) {}

  Int norm() const { return re * re + im * im; }
  GaussianInteger conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInteger& operator+=(const GaussianInteger& o) { return *this = *this + o; }
  GaussianInteger& operator-=(const GaussianInteger& o) { return *this = *this - o; }
  GaussianInteger& operator*=(const GaussianInteger& o) { return *this = *this * o; }

  friend std::ostream& operator<<(std::ostream& os, const GaussianInteger& g) {
    return os << g.re << (sgn(g.im) < 0 ? "-" : "+") << abs(g.im) << "i";
  }
};

/// a / b in Z[i], throwing unless b divides a.
inline GaussianInteger exact_div(const GaussianInteger& a, const GaussianInteger& b) {
  Int n = b.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian integer");
  GaussianInteger t = a * b.conj();
  return {exact_div(t.re, n), exact_div(t.im, n)};
}

inline GaussianInteger pow(GaussianInteger base, unsigned long e) {
  GaussianInteger r(Int(1));
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace chatelet
