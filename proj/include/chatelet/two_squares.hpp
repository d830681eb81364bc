#pragma once

#include "chatelet/bigint.hpp"
#include "chatelet/cubic.hpp"
#include "chatelet/factor.hpp"
#include "chatelet/gaussian.hpp"

#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chatelet {

/// Membership of n in the set of sums of two squares, with a witness
/// a^2 + b^2 = n (0 <= a <= b) when it is one, and otherwise the reason it
/// is not: a negative input, or a prime = 3 mod 4 dividing n to an odd power.
struct TwoSquareCertificate {
  bool member = false;
  std::optional<GaussianInteger> witness;
  std::optional<Int> obstruction;  // empty with member == false means "negative"
  unsigned obstruction_exponent = 0;

  bool negative() const { return !member && !obstruction; }
};

/// Square root of a modulo an odd prime q, for a quadratic residue a.
inline Int tonelli_shanks(const Int& a, const Int& q) {
  Int r = floor_mod(a, q);
  if (sgn(r) == 0) return Int(0);
  if (mpz_legendre(r.get_mpz_t(), q.get_mpz_t()) != 1) {
    throw std::domain_error(to_string(a) + " is not a square mod " + to_string(q));
  }
  Int odd = q - 1;
  unsigned long s = mpz_scan1(odd.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), s);

  Int z(2);
  while (mpz_legendre(z.get_mpz_t(), q.get_mpz_t()) != -1) ++z;

  auto powm = [&](const Int& b, const Int& e) {
    Int out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    return out;
  };
  auto mulm = [&](const Int& x, const Int& y) { return floor_mod(x * y, q); };

  unsigned long m = s;
  Int c = powm(z, odd);
  Int t = powm(r, odd);
  Int root = powm(r, (odd + 1) / 2);
  while (t != 1) {
    unsigned long i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = mulm(t2, t2);
      ++i;
    }
    Int b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mulm(b, b);
    m = i;
    c = mulm(b, b);
    t = mulm(t, c);
    root = mulm(root, b);
  }
  return root;
}

/// a + b i with a^2 + b^2 = q for a prime q = 1 mod 4 (or q = 2). Runs the
/// Euclidean descent on (q, x) with x^2 = -1 mod q, which is the Gaussian gcd
/// of q and x + i.
inline GaussianInteger prime_two_squares(const Int& q) {
  if (q == 2) return {Int(1), Int(1)};
  Int x = tonelli_shanks(q - 1, q);
  if (2 * x > q) x = q - x;
  Int a = q;
  Int b = x;
  while (b * b > q) {
    Int r = floor_mod(a, b);
    a = b;
    b = r;
  }
  Int rest = q - b * b;
  Int c = isqrt(rest);
  if (c * c != rest) throw std::logic_error("two-square descent failed for " + to_string(q));
  return {b, c};
}

inline TwoSquareCertificate certificate_from(const Factorization& f) {
  TwoSquareCertificate cert;
  if (f.sign < 0) return cert;
  GaussianInteger w(Int(1));
  for (const auto& [q, e] : f.factors) {
    if (q == 2) {
      w *= pow(GaussianInteger(Int(1), Int(1)), e);
    } else if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) {
      if (e % 2 == 1) {
        cert.obstruction = q;
        cert.obstruction_exponent = e;
        return cert;
      }
      w *= GaussianInteger(pow(q, e / 2));
    } else {
      w *= pow(prime_two_squares(q), e);
    }
  }
  Int a = abs(w.re);
  Int b = abs(w.im);
  if (a > b) swap(a, b);
  cert.member = true;
  cert.witness = GaussianInteger(a, b);
  return cert;
}

/// Decides whether n is a sum of two squares through its factorization.
/// Propagates EffortExceeded.
inline TwoSquareCertificate is_sum_two_squares(const Int& n) {
  if (sgn(n) < 0) return {};
  if (sgn(n) == 0) return {true, GaussianInteger(Int(0), Int(0)), std::nullopt, 0};
  return certificate_from(factorize(n));
}

/// Membership only, for bulk scans. After trial division the cofactor is
/// odd; if it is 3 mod 4 some prime 3 mod 4 divides it to an odd power and
/// no further factoring is needed.
inline bool is_sum_two_squares_member(const Int& n) {
  if (sgn(n) < 0) return false;
  if (sgn(n) == 0) return true;
  std::vector<std::pair<Int, unsigned>> small;
  Int rest = detail::trial_divide(n, small);
  for (const auto& [q, e] : small) {
    if (e % 2 == 1 && mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) return false;
  }
  if (rest == 1) return true;
  if (mpz_fdiv_ui(rest.get_mpz_t(), 4) == 3) return false;
  Factorization f;
  detail::split_cofactor(rest, f);
  for (const auto& [q, e] : f.factors) {
    if (e % 2 == 1 && mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) return false;
  }
  return true;
}

/// Raised by count_b when p(n) cannot be factored within budget.
class CountEffortExceeded : public EffortExceeded {
 public:
  CountEffortExceeded(const EffortExceeded& e, Int n)
      : EffortExceeded(e.partial(), e.cofactor()), n_(std::move(n)) {}
  const Int& n() const { return n_; }

 private:
  Int n_;
};

/// #{n in [first, last] : p(n) is a sum of two squares}.
inline std::uint64_t count_b_range(const CubicPoly& p, const Int& first, const Int& last) {
  std::uint64_t count = 0;
  for (Int n = first; n <= last; ++n) {
    try {
      if (is_sum_two_squares_member(p(n))) ++count;
    } catch (const EffortExceeded& e) {
      throw CountEffortExceeded(e, n);
    }
  }
  return count;
}

/// #{1 <= n <= X : p(n) is a sum of two squares}. The range is split into
/// `shards` contiguous pieces counted concurrently and summed; the result
/// does not depend on the shard count.
inline std::uint64_t count_b(const CubicPoly& p, const Int& x, unsigned shards = 1) {
  if (x < 1) throw std::invalid_argument("count_B requires X >= 1");
  if (shards <= 1) return count_b_range(p, Int(1), x);
  std::vector<std::uint64_t> partial(shards, 0);
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> workers;
  const Int step = floor_div(x + shards - 1, Int(shards));
  for (unsigned k = 0; k < shards; ++k) {
    Int first = step * k + 1;
    Int last = step * (k + 1);
    if (last > x) last = x;
    workers.emplace_back([&, k, first, last] {
      try {
        if (first <= last) partial[k] = count_b_range(p, first, last);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace chatelet
