#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chatelet {

using Int = mpz_class;
using Rational = mpq_class;

inline Int make_int(std::int64_t v) {
  Int r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline Int parse_int(const std::string& s) {
  Int r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return r;
}

/// Parses "a", "a/b" or a terminating decimal such as "0.25".
inline Rational parse_rational(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("not a rational: '" + s + "'");
    }
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t scale = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+") {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
  Rational q(parse_int(digits), den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Int& v) { return v.get_str(10); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Divides a by b, throwing if the division leaves a remainder.
inline Int exact_div(const Int& a, const Int& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw std::logic_error("inexact division " + to_string(a) + " / " + to_string(b));
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool is_odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }
inline bool is_even(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Largest r >= 0 with r^k <= n (n >= 0).
inline Int iroot(const Int& n, unsigned long k) {
  if (sgn(n) <= 0) return Int(0);
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Int isqrt(const Int& n) { return iroot(n, 2); }

inline Int pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& b, unsigned long e) {
  Int num = pow(b.get_num(), e);
  Int den = pow(b.get_den(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Int floor(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

/// floor(c * X^(1/6)) for c >= 0, X >= 0, computed exactly.
inline Int floor_sixth_root_scaled(const Rational& c, const Int& x) {
  if (sgn(c) <= 0 || sgn(x) <= 0) return Int(0);
  return iroot(floor(pow(c, 6) * Rational(x)), 6);
}

inline bool fits_u64(const Int& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& v) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof r, 0, 0, v.get_mpz_t());
  return r;
}

inline Int from_u64(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

}  // namespace chatelet
