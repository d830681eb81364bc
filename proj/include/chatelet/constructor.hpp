#pragma once

#include "chatelet/bigint.hpp"
#include "chatelet/cubic.hpp"
#include "chatelet/theta.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chatelet {

class NotCoprimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlphaNotEvenError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// v1 is not congruent to the Bezout representative modulo 2*alpha.
class CongruenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal parity or determinant check failed. Always a bug.
class OddnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Odd u, v with u*alpha - v*beta = 1 and 0 < v <= 2*alpha.
struct BezoutPair {
  Int u;
  Int v;
};

inline BezoutPair bezout_odd(const Int& alpha, const Int& beta) {
  if (!is_even(alpha) || alpha < 2) {
    throw AlphaNotEvenError("alpha must be even and >= 2, got " + to_string(alpha));
  }
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
  if (g != 1) {
    throw NotCoprimeError("gcd(" + to_string(alpha) + ", " + to_string(beta) + ") = " +
                          to_string(g));
  }
  // s*alpha + t*beta = 1  =>  u = s, v = -t.
  Int u = s;
  Int v = -t;
  if (is_even(u)) {
    u += beta;
    v += alpha;
  }
  // Shifting (u, v) by (2 beta, 2 alpha) keeps both the identity and parity.
  const Int modulus = 2 * alpha;
  Int k = floor_div(v - 1, modulus);
  v -= k * modulus;
  u -= k * 2 * beta;
  return {u, v};
}

/// One member of the explicit family: omega1^2 + omega2^2 = n - theta, with
/// omega1 = u0 + u1 theta + beta theta^2 and omega2 = v0 + v1 theta + alpha theta^2.
struct Solution {
  ThetaElem omega1;
  ThetaElem omega2;
  Int n;
  Int alpha;
  Int beta;
  Int v1;
};

/// u1 v2 - v1 u2.
inline Int determinant_i(const ThetaElem& omega1, const ThetaElem& omega2) {
  return omega1.c1 * omega2.c2 - omega2.c1 * omega1.c2;
}

/// Checks every family invariant of s, throwing OddnessError on failure.
inline void check_solution(const CubicPoly& p, const Solution& s) {
  auto fail = [&](const std::string& what) {
    throw OddnessError(what + " for (alpha, beta, v1) = (" + to_string(s.alpha) + ", " +
                       to_string(s.beta) + ", " + to_string(s.v1) + ")");
  };
  ThetaElem g = square_sum_expand(p, s.omega1, s.omega2);
  if (g.c0 != s.n || g.c1 != -1 || sgn(g.c2) != 0) fail("omega1^2 + omega2^2 != n - theta");
  if (s.omega1.c2 != s.beta || s.omega2.c2 != s.alpha) fail("trailing coefficients mismatch");
  if (!is_even(s.alpha)) fail("alpha odd");
  if (!is_odd(s.omega1.c1) || !is_odd(s.omega2.c1)) fail("u1 or v1 even");
  if (determinant_i(s.omega1, s.omega2) != 1) fail("I(u1, u2, v1, v2) != 1");
  if (gcd(s.omega1.c2, s.omega2.c2) != 1) fail("gcd(u2, v2) != 1");
}

/// Completes (alpha, beta, v1) to the unique family member with v2 = alpha,
/// u2 = beta and the given v1.
inline Solution complete(const CubicPoly& p, const Int& alpha, const Int& beta, const Int& v1) {
  if (!p.square_term_even()) throw ParityError(ParityError::Condition::kSquareTermEven);
  if (!p.mixed_term_odd()) throw ParityError(ParityError::Condition::kMixedTermOdd);
  const BezoutPair bz = bezout_odd(alpha, beta);
  const Int modulus = 2 * alpha;
  if (sgn(floor_mod(v1 - bz.v, modulus)) != 0) {
    throw CongruenceError("v1 = " + to_string(v1) + " is not " + to_string(bz.v) + " mod " +
                          to_string(modulus));
  }
  const Int& u2 = beta;
  const Int& v2 = alpha;
  if (!is_odd(u2)) throw OddnessError("beta even although coprime to even alpha");
  if (!is_odd(v1)) throw OddnessError("v1 even inside the Bezout class");
  const Int u1 = exact_div(1 + v1 * beta, alpha);
  if (!is_odd(u1)) throw OddnessError("u1 = " + to_string(u1) + " is even");

  const Int a = p.a();
  const Int b = p.b();
  const Int h1 = -1 + 2 * p.a1 * u1 * u2 - u2 * u2 * a + 2 * p.a1 * v1 * v2 - v2 * v2 * a;
  const Int h2 = -u1 * u1 + 2 * p.a2 * u1 * u2 - u2 * u2 * b - v1 * v1 + 2 * p.a2 * v1 * v2 -
                 v2 * v2 * b;
  if (!is_even(h1) || !is_even(h2)) {
    throw OddnessError("h1 = " + to_string(h1) + ", h2 = " + to_string(h2) + " not both even");
  }
  const Int half_h1 = h1 / 2;
  const Int half_h2 = h2 / 2;
  const Int u0 = v2 * half_h1 - v1 * half_h2;
  const Int v0 = -u2 * half_h1 + u1 * half_h2;

  Solution s{ThetaElem(u0, u1, u2), ThetaElem(v0, v1, v2), Int(0), alpha, beta, v1};
  s.n = square_sum_expand(p, s.omega1, s.omega2).c0;
  check_solution(p, s);
  return s;
}

/// Enumeration window derived from (X, c): alpha even in [2, alpha_max],
/// |v1| <= v1_bound, where v1_bound = floor(c X^(1/6)) and
/// alpha_max = floor((c/4) X^(1/6)) = floor(v1_bound / 4).
struct FamilyWindow {
  Int v1_bound;
  Int alpha_max;
};

inline FamilyWindow family_window(const Int& x, const Rational& c) {
  Int v = floor_sixth_root_scaled(c, x);
  return {v, floor_div(v, Int(4))};
}

/// First v1 >= -bound in the class rep mod modulus.
inline Int first_in_class(const Int& rep, const Int& modulus, const Int& bound) {
  return -bound + floor_mod(rep + bound, modulus);
}

/// #{v1 : v1 = v(alpha, beta) mod 2 alpha, |v1| <= c X^(1/6)}.
inline Int vc_cardinality(const Int& alpha, const Int& beta, const Int& x, const Rational& c) {
  const Int bound = floor_sixth_root_scaled(c, x);
  const Int rep = bezout_odd(alpha, beta).v;
  const Int modulus = 2 * alpha;
  Int first = first_in_class(rep, modulus, bound);
  if (first > bound) return Int(0);
  return floor_div(bound - first, modulus) + 1;
}

/// vc_cardinality >= c X^(1/6) / (4 alpha), decided exactly as
/// (4 alpha count)^6 >= c^6 X.
inline bool vc_lower_bound_holds(const Int& alpha, const Int& count, const Int& x,
                                 const Rational& c) {
  return Rational(pow(Int(4 * alpha * count), 6)) >= pow(c, 6) * Rational(x);
}

/// Calls visit(alpha, beta) for every even alpha in the window and every
/// beta in [1, alpha] coprime to it, in increasing order.
template <class Visit>
void for_each_alpha_beta(const FamilyWindow& w, Visit&& visit) {
  for (Int alpha = 2; alpha <= w.alpha_max; alpha += 2) {
    for (Int beta = 1; beta <= alpha; ++beta) {
      if (gcd(alpha, beta) == 1) visit(alpha, beta);
    }
  }
}

/// Emits complete(p, alpha, beta, v1) for every admissible triple, in
/// lexicographic (alpha, beta, v1) order. Only alpha values for which
/// alpha_filter returns true are visited, which lets callers split the
/// work into independent alpha slices.
template <class Emit>
void enumerate_family(const CubicPoly& p, const Int& x, const Rational& c, Emit&& emit,
                      const std::function<bool(const Int&)>& alpha_filter = {}) {
  if (x < 64) throw std::invalid_argument("enumerate_family requires X >= 64");
  if (sgn(c) <= 0 || c > 4) throw std::invalid_argument("enumerate_family requires 0 < c <= 4");
  const FamilyWindow w = family_window(x, c);
  for_each_alpha_beta(w, [&](const Int& alpha, const Int& beta) {
    if (alpha_filter && !alpha_filter(alpha)) return;
    const Int modulus = 2 * alpha;
    const Int rep = bezout_odd(alpha, beta).v;
    for (Int v1 = first_in_class(rep, modulus, w.v1_bound); v1 <= w.v1_bound; v1 += modulus) {
      emit(complete(p, alpha, beta, v1));
    }
  });
}

inline std::vector<Solution> collect_family(const CubicPoly& p, const Int& x, const Rational& c) {
  std::vector<Solution> out;
  enumerate_family(p, x, c, [&](Solution s) { out.push_back(std::move(s)); });
  return out;
}

/// A rational d > 0 with 2 (1 + |theta| + |theta|^2)^2 d^2 < 1, using the
/// upper bound max(|lo|, |hi|) of the isolating interval for |theta|.
inline Rational height_budget_for(const Rational& theta_abs_bound) {
  Rational s = 1 + theta_abs_bound + theta_abs_bound * theta_abs_bound;
  Rational d = 1 / (2 * s);
  d.canonicalize();
  return d;
}

inline Rational theta_abs_bound(const CubicPoly& p) {
  Rational lo = abs(p.theta_lo);
  Rational hi = abs(p.theta_hi);
  return lo > hi ? lo : hi;
}

inline Rational height_budget(const CubicPoly& p) { return height_budget_for(theta_abs_bound(p)); }

}  // namespace chatelet
