#pragma once

#include "chatelet/bigint.hpp"
#include "chatelet/cubic.hpp"
#include "chatelet/gaussian.hpp"
#include "chatelet/poly.hpp"

#include <array>
#include <ostream>

namespace chatelet {

/// c0 + c1*theta + c2*theta^2 in Z[theta]. Always reduced: there is no
/// representation of higher degree, so equality is coefficientwise.
struct ThetaElem {
  Int c0{0}, c1{0}, c2{0};

  ThetaElem() = default;
  ThetaElem(Int x0, Int x1 = Int(0), Int x2 = Int(0))
      : c0(std::move(x0)), c1(std::move(x1)), c2(std::move(x2)) {}
  ThetaElem(long x0, long x1, long x2) : c0(x0), c1(x1), c2(x2) {}

  static ThetaElem theta() { return {Int(0), Int(1), Int(0)}; }

  /// M_theta: the largest absolute coefficient.
  Int height() const {
    Int m = abs(c0);
    if (abs(c1) > m) m = abs(c1);
    if (abs(c2) > m) m = abs(c2);
    return m;
  }

  bool is_zero() const { return sgn(c0) == 0 && sgn(c1) == 0 && sgn(c2) == 0; }

  /// c2 t^2 + c1 t + c0 as a polynomial in t.
  IntPoly as_poly() const { return IntPoly{c0, c1, c2}; }

  friend bool operator==(const ThetaElem& x, const ThetaElem& y) {
    return x.c0 == y.c0 && x.c1 == y.c1 && x.c2 == y.c2;
  }
  friend ThetaElem operator+(const ThetaElem& x, const ThetaElem& y) {
    return {x.c0 + y.c0, x.c1 + y.c1, x.c2 + y.c2};
  }
  friend ThetaElem operator-(const ThetaElem& x, const ThetaElem& y) {
    return {x.c0 - y.c0, x.c1 - y.c1, x.c2 - y.c2};
  }
  friend ThetaElem operator-(const ThetaElem& x) { return {-x.c0, -x.c1, -x.c2}; }

  friend std::ostream& operator<<(std::ostream& os, const ThetaElem& x) {
    return os << "(" << x.c0 << ", " << x.c1 << ", " << x.c2 << ")";
  }
};

/// Product in Z[theta], folding theta^3 and theta^4 back into degree < 3.
inline ThetaElem theta_mul(const CubicPoly& p, const ThetaElem& x, const ThetaElem& y) {
  // Raw product coefficients of degrees 0..4.
  Int d0 = x.c0 * y.c0;
  Int d1 = x.c0 * y.c1 + x.c1 * y.c0;
  Int d2 = x.c0 * y.c2 + x.c1 * y.c1 + x.c2 * y.c0;
  Int d3 = x.c1 * y.c2 + x.c2 * y.c1;
  Int d4 = x.c2 * y.c2;
  // theta^3 = -a2 theta^2 - a1 theta - a0
  // theta^4 = (a2^2 - a1) theta^2 + (a1 a2 - a0) theta + a0 a2
  return {d0 - d3 * p.a0 + d4 * p.a0 * p.a2,
          d1 - d3 * p.a1 + d4 * p.a(),
          d2 - d3 * p.a2 + d4 * p.b()};
}

inline ThetaElem theta_pow(const CubicPoly& p, ThetaElem base, unsigned long e) {
  ThetaElem r(Int(1));
  while (e) {
    if (e & 1) r = theta_mul(p, r, base);
    base = theta_mul(p, base, base);
    e >>= 1;
  }
  return r;
}

/// u^2 + v^2 through the closed-form quadratic coefficients g0, g1, g2.
inline ThetaElem square_sum_expand(const CubicPoly& p, const ThetaElem& u, const ThetaElem& v) {
  const Int a = p.a();
  const Int b = p.b();
  const Int a0a2 = p.a0 * p.a2;
  auto part0 = [&](const ThetaElem& w) -> Int {
    return w.c0 * w.c0 - 2 * p.a0 * w.c1 * w.c2 + w.c2 * w.c2 * a0a2;
  };
  auto part1 = [&](const ThetaElem& w) -> Int {
    return 2 * w.c0 * w.c1 - 2 * p.a1 * w.c1 * w.c2 + w.c2 * w.c2 * a;
  };
  auto part2 = [&](const ThetaElem& w) -> Int {
    return 2 * w.c0 * w.c2 + w.c1 * w.c1 - 2 * p.a2 * w.c1 * w.c2 + w.c2 * w.c2 * b;
  };
  return {part0(u) + part0(v), part1(u) + part1(v), part2(u) + part2(v)};
}

/// Product of x over the three conjugates of theta, as Res(p, x(t)).
inline Int norm(const CubicPoly& p, const ThetaElem& x) {
  return resultant(p.as_poly(), x.as_poly());
}

/// re + i*im in Z[theta, i].
struct GaussThetaElem {
  ThetaElem re;
  ThetaElem im;

  GaussThetaElem conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend bool operator==(const GaussThetaElem& x, const GaussThetaElem& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend GaussThetaElem operator+(const GaussThetaElem& x, const GaussThetaElem& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussThetaElem operator-(const GaussThetaElem& x, const GaussThetaElem& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussThetaElem& x) {
    return os << x.re << " + i" << x.im;
  }
};

inline GaussThetaElem gauss_theta_mul(const CubicPoly& p, const GaussThetaElem& x,
                                      const GaussThetaElem& y) {
  return {theta_mul(p, x.re, y.re) - theta_mul(p, x.im, y.im),
          theta_mul(p, x.re, y.im) + theta_mul(p, x.im, y.re)};
}

/// Q(x) = p(x - i) p(x + i), the minimal polynomial of theta + i over Z.
inline IntPoly degree_six_minpoly(const CubicPoly& p) {
  // p(x + i) = A(x) + i B(x) with A, B in Z[x], and p(x - i) is its conjugate,
  // so Q = A^2 + B^2.
  const GaussPoly shift{GaussianInteger(Int(0), Int(1)), GaussianInteger(Int(1))};
  GaussPoly acc;
  for (int k = 3; k >= 0; --k) {
    Int coeff = k == 3 ? Int(1) : k == 2 ? p.a2 : k == 1 ? p.a1 : p.a0;
    acc = acc * shift + GaussPoly{GaussianInteger(coeff)};
  }
  std::vector<Int> re, im;
  for (const auto& c : acc.coeffs()) {
    re.push_back(c.re);
    im.push_back(c.im);
  }
  IntPoly a(re), b(im);
  return a * a + b * b;
}

/// Evaluates an integer polynomial at an element of Z[theta, i] by Horner.
inline GaussThetaElem evaluate(const CubicPoly& p, const IntPoly& q, const GaussThetaElem& x) {
  GaussThetaElem acc{};
  const auto& c = q.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = gauss_theta_mul(p, acc, x);
    acc.re.c0 += *it;
  }
  return acc;
}

}  // namespace chatelet
