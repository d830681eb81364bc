#pragma once

#include "chatelet/bigint.hpp"
#include "chatelet/poly.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chatelet {

/// The polynomial has an integer root, so it factors over Q.
class ReducibleError : public std::runtime_error {
 public:
  explicit ReducibleError(Int root)
      : std::runtime_error("reducible: integer root " + to_string(root)), root_(std::move(root)) {}
  const Int& root() const { return root_; }

 private:
  Int root_;
};

/// One of the two parity conditions (a2^2 - a1 even, a1*a2 - a0 odd) fails.
class ParityError : public std::runtime_error {
 public:
  enum class Condition { kSquareTermEven, kMixedTermOdd };

  explicit ParityError(Condition which)
      : std::runtime_error(which == Condition::kSquareTermEven
                               ? "parity violation: a2^2 - a1 is odd"
                               : "parity violation: a1*a2 - a0 is even"),
        which_(which) {}
  Condition which() const { return which_; }

 private:
  Condition which_;
};

enum class ParityMode { kStrict, kRelaxed };

/// Monic cubic x^3 + a2 x^2 + a1 x + a0, irreducible over Q, together with a
/// rational interval isolating its largest real root theta.
struct CubicPoly {
  Int a2, a1, a0;
  Rational theta_lo, theta_hi;

  /// a2^2 - a1, the theta^2 coefficient of theta^4.
  Int b() const { return a2 * a2 - a1; }
  /// a1*a2 - a0, the theta coefficient of theta^4.
  Int a() const { return a1 * a2 - a0; }

  bool square_term_even() const { return is_even(b()); }
  bool mixed_term_odd() const { return is_odd(a()); }
  bool has_family_parity() const { return square_term_even() && mixed_term_odd(); }

  Int operator()(const Int& x) const { return ((x + a2) * x + a1) * x + a0; }
  Rational operator()(const Rational& x) const {
    return ((x + Rational(a2)) * x + Rational(a1)) * x + Rational(a0);
  }

  IntPoly as_poly() const { return IntPoly{a0, a1, a2, Int(1)}; }

  std::string descriptor() const {
    return to_string(a2) + "," + to_string(a1) + "," + to_string(a0);
  }

  friend std::ostream& operator<<(std::ostream& os, const CubicPoly& p) {
    return os << "x^3 + (" << p.a2 << ")x^2 + (" << p.a1 << ")x + (" << p.a0 << ")";
  }
};

namespace detail {

using RatPoly = Poly<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

inline RatPoly derivative(const RatPoly& p) {
  std::vector<Rational> c;
  for (int k = 1; k <= p.degree(); ++k) c.push_back(p[static_cast<std::size_t>(k)] * k);
  return RatPoly(std::move(c));
}

inline RatPoly remainder(RatPoly num, const RatPoly& den) {
  while (!num.is_zero() && num.degree() >= den.degree()) {
    auto shift = static_cast<std::size_t>(num.degree() - den.degree());
    Rational factor = num[static_cast<std::size_t>(num.degree())] /
                      den[static_cast<std::size_t>(den.degree())];
    num = num - RatPoly::monomial(factor, shift) * den;
  }
  return num;
}

/// Sturm chain of a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p) {
    chain_.push_back(to_rational(p));
    chain_.push_back(derivative(chain_[0]));
    while (chain_.back().degree() > 0) {
      RatPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(RatPoly{} - r);
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      int sign = sgn(s.eval(x));
      if (sign == 0) continue;
      if (last != 0 && sign != last) ++count;
      last = sign;
    }
    return count;
  }

  /// Last element: gcd(p, p') up to a constant. Degree > 0 means a repeated root.
  const RatPoly& gcd_with_derivative() const { return chain_.back(); }

  /// Distinct real roots in (lo, hi].
  int roots_in(const Rational& lo, const Rational& hi) const {
    return variations(lo) - variations(hi);
  }

 private:
  std::vector<RatPoly> chain_;
};

inline Int cauchy_bound(const Int& a2, const Int& a1, const Int& a0) {
  Int m = abs(a2);
  if (abs(a1) > m) m = abs(a1);
  if (abs(a0) > m) m = abs(a0);
  return m + 1;
}

/// Isolating intervals (lo, hi] for every real root, each of width <= 1/4.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const SturmChain& sturm,
                                                                     const Int& bound) {
  std::vector<std::pair<Rational, Rational>> done;
  std::vector<std::pair<Rational, Rational>> todo{{Rational(-bound), Rational(bound)}};
  const Rational quarter(1, 4);
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    int k = sturm.roots_in(lo, hi);
    if (k == 0) continue;
    if (k == 1 && hi - lo <= quarter) {
      done.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    todo.emplace_back(lo, mid);
    todo.emplace_back(mid, hi);
  }
  return done;
}

}  // namespace detail

/// Width bound for the theta isolating interval: 2^-32.
inline Rational theta_interval_width() { return Rational(Int(1), Int(1) << 32); }

/// Checks irreducibility and (in strict mode) the parity conditions, and
/// isolates the largest real root to an interval of width <= 2^-32.
///
/// A monic integer cubic is reducible over Q iff it has an integer root. Real
/// roots are isolated exactly with a Sturm chain and every integer inside an
/// isolating interval is tested, which covers every divisor of a0 that could
/// be a root.
inline CubicPoly validate_poly(const Int& a2, const Int& a1, const Int& a0,
                               ParityMode mode = ParityMode::kStrict) {
  CubicPoly p{a2, a1, a0, Rational(0), Rational(0)};
  if (sgn(a0) == 0) throw ReducibleError(Int(0));

  const detail::SturmChain sturm(p.as_poly());
  // A repeated root of a cubic is rational (the root of a linear gcd, or a
  // triple root -a2/3), hence an integer for monic p.
  const auto& g = sturm.gcd_with_derivative();
  if (g.degree() == 1) throw ReducibleError(floor(-g[0] / g[1]));
  if (g.degree() == 2) throw ReducibleError(floor(Rational(-a2, 3)));
  auto intervals = detail::isolate_real_roots(sturm, detail::cauchy_bound(a2, a1, a0));
  for (const auto& [lo, hi] : intervals) {
    Int first = floor(lo);
    Int last = floor(hi);
    for (Int z = first; z <= last; ++z) {
      if (sgn(p(z)) == 0) throw ReducibleError(z);
    }
  }

  if (mode == ParityMode::kStrict) {
    if (!p.square_term_even()) throw ParityError(ParityError::Condition::kSquareTermEven);
    if (!p.mixed_term_odd()) throw ParityError(ParityError::Condition::kMixedTermOdd);
  }

  // Odd degree, so at least one real root exists; refine the largest.
  auto largest = intervals.front();
  for (const auto& iv : intervals)
    if (iv.first > largest.first) largest = iv;
  auto [lo, hi] = largest;
  const Rational width = theta_interval_width();
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (sgn(p(mid)) * sgn(p(hi)) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  p.theta_lo = lo;
  p.theta_hi = hi;
  return p;
}

inline CubicPoly validate_poly(long a2, long a1, long a0, ParityMode mode = ParityMode::kStrict) {
  return validate_poly(Int(a2), Int(a1), Int(a0), mode);
}

}  // namespace chatelet
