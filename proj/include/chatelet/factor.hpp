#pragma once

#include "chatelet/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chatelet {

/// Prime factorization: strictly increasing primes with positive exponents.
struct Factorization {
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> factors;

  Int reconstruct() const {
    Int r(sign);
    for (const auto& [q, e] : factors) r *= pow(q, e);
    return r;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.sign == b.sign && a.factors == b.factors;
  }
};

/// The rho step budget ran out. partial() holds the primes found so far and
/// cofactor() the part of |n| that could not be split.
class EffortExceeded : public std::runtime_error {
 public:
  EffortExceeded(Factorization partial, Int cofactor)
      : std::runtime_error("factorization budget exhausted; unsplit cofactor " +
                           to_string(cofactor)),
        partial_(std::move(partial)),
        cofactor_(std::move(cofactor)) {}
  const Factorization& partial() const { return partial_; }
  const Int& cofactor() const { return cofactor_; }

 private:
  Factorization partial_;
  Int cofactor_;
};

inline constexpr std::uint32_t kTrialDivisionBound = 10000;
inline constexpr std::uint64_t kRhoStepBudget = std::uint64_t{1} << 24;

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Odd primes below the trial bound with the data for multiply-based
/// divisibility tests: n % q == 0 iff n * inverse <= limit.
struct TrialPrime {
  u64 q;
  u64 inverse;
  u64 limit;
};

inline const std::vector<TrialPrime>& trial_primes() {
  static const std::vector<TrialPrime> table = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<TrialPrime> t;
    for (u64 q = 3; q <= kTrialDivisionBound; q += 2) {
      if (composite[q]) continue;
      for (u64 m = q * q; m <= kTrialDivisionBound; m += 2 * q) composite[m] = true;
      u64 inv = q;  // Newton iteration for q^-1 mod 2^64
      for (int i = 0; i < 5; ++i) inv *= 2 - q * inv;
      t.push_back({q, inv, ~u64{0} / q});
    }
    return t;
  }();
  return table;
}

/// Montgomery arithmetic modulo an odd 64-bit n.
class Mont64 {
 public:
  explicit Mont64(u64 n) : n_(n) {
    inv_ = n;
    for (int i = 0; i < 5; ++i) inv_ *= 2 - n * inv_;
    r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % n);
    r2_ = static_cast<u64>(static_cast<u128>(r2_) * r2_ % n);
  }

  u64 modulus() const { return n_; }

  u64 reduce(u128 t) const {
    u64 m = static_cast<u64>(t) * inv_;
    u64 mn_hi = static_cast<u64>((static_cast<u128>(m) * n_) >> 64);
    u64 t_hi = static_cast<u64>(t >> 64);
    return t_hi >= mn_hi ? t_hi - mn_hi : t_hi + (n_ - mn_hi);
  }
  u64 to(u64 a) const { return mul(a % n_, r2_); }
  u64 from(u64 a) const { return reduce(a); }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (n_ - b); }
  u64 pow(u64 base, u64 e) const {
    u64 r = to(1);
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

 private:
  u64 n_;
  u64 inv_;
  u64 r2_;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  if (n < 41 * 41) return true;
  const Mont64 m(n);
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  const u64 one = m.to(1);
  const u64 minus_one = m.to(n - 1);
  for (u64 base : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    u64 a = base % n;
    if (a == 0) continue;
    u64 x = m.pow(m.to(a), d);
    if (x == one || x == minus_one) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = m.mul(x, x);
      if (x == minus_one) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Brent's cycle variant of Pollard rho on an odd composite. Returns a
/// nontrivial factor, or 0 once `budget` iterations are spent.
inline u64 brent_rho_u64(u64 n, u64& budget) {
  const Mont64 m(n);
  constexpr u64 kBatch = 128;
  for (u64 c = 1; budget > 0; ++c) {
    const u64 cm = m.to(c);
    u64 y = m.to(2), x = y, ys = y, q = m.to(1);
    u64 g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = m.add(m.mul(y, y), cm);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        u64 steps = std::min(kBatch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = m.add(m.mul(y, y), cm);
          q = m.mul(q, x > y ? x - y : y - x);
        }
        budget = budget > 2 * steps ? budget - 2 * steps : 0;
        g = std::gcd(q, n);
        if (budget == 0 && g == 1) return 0;
      }
    }
    if (g == n) {
      // Batch overshot: step singly from the saved point.
      do {
        ys = m.add(m.mul(ys, ys), cm);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

inline bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  // Baillie-PSW plus extra Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline Int brent_rho(const Int& n, std::uint64_t& budget) {
  if (fits_u64(n)) return from_u64(brent_rho_u64(to_u64(n), budget));
  constexpr std::uint64_t kBatch = 128;
  auto f = [&](Int& v, const Int& c) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  for (unsigned long cv = 1; budget > 0; ++cv) {
    const Int c(cv);
    Int y(2), x, ys, q(1), g(1), diff;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) f(y, c);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        std::uint64_t steps = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          f(y, c);
          diff = x - y;
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget = budget > 2 * steps ? budget - 2 * steps : 0;
        g = gcd(q, n);
        if (budget == 0 && g == 1) return Int(0);
      }
    }
    if (g == n) {
      do {
        f(ys, c);
        g = gcd(x - ys, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return Int(0);
}

inline void add_factor(std::vector<std::pair<Int, unsigned>>& out, const Int& q, unsigned e) {
  for (auto& [p, k] : out) {
    if (p == q) {
      k += e;
      return;
    }
  }
  out.emplace_back(q, e);
}

/// Strips 2 and the odd trial primes from n; returns the cofactor.
inline Int trial_divide(const Int& n, std::vector<std::pair<Int, unsigned>>& out) {
  Int m = n;
  unsigned twos = static_cast<unsigned>(mpz_scan1(m.get_mpz_t(), 0));
  if (twos) {
    out.emplace_back(Int(2), twos);
    mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);
  }
  if (fits_u64(m)) {
    u64 v = to_u64(m);
    for (const auto& tp : trial_primes()) {
      if (tp.q * tp.q > v) break;
      unsigned e = 0;
      while (v * tp.inverse <= tp.limit) {
        v *= tp.inverse;  // exact division
        ++e;
      }
      if (e) out.emplace_back(Int(static_cast<unsigned long>(tp.q)), e);
    }
    return from_u64(v);
  }
  for (const auto& tp : trial_primes()) {
    unsigned long q = static_cast<unsigned long>(tp.q);
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      ++e;
    }
    if (e) out.emplace_back(Int(q), e);
  }
  return m;
}

/// Splits a cofactor with no prime factors below the trial bound into
/// primes, merging them into f.
inline void split_cofactor(const Int& rest, Factorization& f) {
  std::vector<std::pair<Int, unsigned>> pending{{rest, 1u}};
  while (!pending.empty()) {
    auto [m, e] = pending.back();
    pending.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m)) {
      add_factor(f.factors, m, e);
      continue;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      pending.emplace_back(isqrt(m), 2 * e);
      continue;
    }
    std::uint64_t budget = kRhoStepBudget;
    Int d = brent_rho(m, budget);
    if (sgn(d) == 0) {
      std::sort(f.factors.begin(), f.factors.end());
      Int cofactor = pow(m, e);
      for (const auto& [r, k] : pending) cofactor *= pow(r, k);
      throw EffortExceeded(f, cofactor);
    }
    pending.emplace_back(d, e);
    pending.emplace_back(exact_div(m, d), e);
  }
  std::sort(f.factors.begin(), f.factors.end());
}

}  // namespace detail

/// Complete factorization of n != 0: trial division below 10^4, then Brent
/// rho with a budget of 2^24 steps per composite cofactor.
inline Factorization factorize(const Int& n) {
  if (sgn(n) == 0) throw std::invalid_argument("cannot factorize 0");
  Factorization f;
  f.sign = sgn(n) < 0 ? -1 : 1;
  Int rest = detail::trial_divide(abs(n), f.factors);
  detail::split_cofactor(rest, f);
  return f;
}

}  // namespace chatelet
