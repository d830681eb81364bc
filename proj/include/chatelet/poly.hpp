#pragma once

#include "chatelet/bigint.hpp"
#include "chatelet/gaussian.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace chatelet {

inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const GaussianInteger& v) { return v.is_zero(); }

/// Dense univariate polynomial, coefficients in ascending degree. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<T> c) : coeffs_(c) { trim(); }
  explicit Poly(std::vector<T> c) : coeffs_(std::move(c)) { trim(); }

  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(Int(0)));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(Int(0)); }

  T eval(const T& x) const {
    T acc(Int(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()), T(Int(0)));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.coeffs_.size(), b.coeffs_.size()), T(Int(0)));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] - b[k];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(Int(0)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      const T& c = p.coeffs_[static_cast<std::size_t>(k)];
      if (chatelet::is_zero(c)) continue;
      if (!first) os << " + ";
      os << "(" << c << ")";
      if (k > 0) os << "*x^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && chatelet::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPoly = Poly<Int>;
using GaussPoly = Poly<GaussianInteger>;

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so T only needs ring operations plus exact_div.
template <class T>
T determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(Int(1));
  T prev(Int(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T(Int(0));
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T(Int(0)) - det : det;
}

/// Sylvester matrix of a (degree m) and b (degree n): n shifted rows of a
/// followed by m shifted rows of b, coefficients leading-first.
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const Poly<T>& a, const Poly<T>& b) {
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, T(Int(0))));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a.coeffs()[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b.coeffs()[n - k];
  return s;
}

/// Res(a, b). For monic a this is the product of b over the roots of a.
template <class T>
T resultant(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return T(Int(0));
  if (a.degree() == 0 && b.degree() == 0) return T(Int(1));
  return determinant(sylvester_matrix(a, b));
}

}  // namespace chatelet
