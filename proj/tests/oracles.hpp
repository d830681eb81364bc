#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include "chatelet/bigint.hpp"
#include "chatelet/cubic.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/theta.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using chatelet::Int;

/// Exhaustive search for a^2 + b^2 = n with 0 <= a <= b.
inline std::optional<std::pair<std::int64_t, std::int64_t>> brute_two_squares(std::int64_t n) {
  if (n < 0) return std::nullopt;
  for (std::int64_t a = 0; 2 * a * a <= n; ++a) {
    std::int64_t rest = n - a * a;
    auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (b * b > rest) --b;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return std::make_pair(a, b);
  }
  return std::nullopt;
}

/// Membership table for 0..limit by marking every a^2 + b^2.
inline std::vector<bool> two_squares_table(std::int64_t limit) {
  std::vector<bool> t(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t a = 0; a * a <= limit; ++a)
    for (std::int64_t b = a; a * a + b * b <= limit; ++b)
      t[static_cast<std::size_t>(a * a + b * b)] = true;
  return t;
}

/// Plain trial division over all d, for n small enough to finish.
inline std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Integer roots of x^3 + a2 x^2 + a1 x + a0 by testing every divisor of a0.
inline std::vector<std::int64_t> divisor_roots(std::int64_t a2, std::int64_t a1, std::int64_t a0) {
  std::vector<std::int64_t> roots;
  auto p = [&](std::int64_t x) { return ((x + a2) * x + a1) * x + a0; };
  if (a0 == 0) {
    roots.push_back(0);
    return roots;
  }
  std::int64_t m = a0 < 0 ? -a0 : a0;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d) continue;
    if (p(d) == 0) roots.push_back(d);
    if (p(-d) == 0) roots.push_back(-d);
  }
  return roots;
}

/// Remainder of f modulo the monic polynomial g by long division.
inline chatelet::IntPoly long_division_remainder(chatelet::IntPoly f, const chatelet::IntPoly& g) {
  while (f.degree() >= g.degree()) {
    auto shift = static_cast<std::size_t>(f.degree() - g.degree());
    Int lead = f[static_cast<std::size_t>(f.degree())];
    f = f - chatelet::IntPoly::monomial(lead, shift) * g;
  }
  return f;
}

/// x * y in Z[theta] through full polynomial product and long division.
inline chatelet::ThetaElem product_by_division(const chatelet::CubicPoly& p,
                                               const chatelet::ThetaElem& x,
                                               const chatelet::ThetaElem& y) {
  auto r = long_division_remainder(x.as_poly() * y.as_poly(), p.as_poly());
  return {r[0], r[1], r[2]};
}

/// Odd (u, v) with u*alpha - v*beta = 1 and 0 < v <= 2*alpha, by search.
inline std::pair<std::int64_t, std::int64_t> bezout_search(std::int64_t alpha, std::int64_t beta) {
  for (std::int64_t v = 1; v <= 2 * alpha; ++v) {
    std::int64_t num = 1 + v * beta;
    if (num % alpha) continue;
    std::int64_t u = num / alpha;
    if (u % 2 != 0 && v % 2 != 0) return {u, v};
  }
  return {0, 0};
}

/// Random cubic satisfying irreducibility and both parity conditions.
inline chatelet::CubicPoly random_family_cubic(std::mt19937_64& rng, std::int64_t range = 30) {
  std::uniform_int_distribution<std::int64_t> coeff(-range, range);
  while (true) {
    std::int64_t a2 = coeff(rng), a1 = coeff(rng), a0 = coeff(rng);
    if ((a2 * a2 - a1) % 2 != 0 || (a1 * a2 - a0) % 2 == 0) continue;
    if (!divisor_roots(a2, a1, a0).empty()) continue;
    return chatelet::validate_poly(Int(a2), Int(a1), Int(a0));
  }
}

inline Int random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return Int(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
}

inline chatelet::ThetaElem random_theta(std::mt19937_64& rng, std::int64_t bound) {
  return {random_int(rng, -bound, bound), random_int(rng, -bound, bound),
          random_int(rng, -bound, bound)};
}

}  // namespace oracle
