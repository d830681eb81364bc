#include "chatelet/factor.hpp"
#include "chatelet/two_squares.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chatelet;

namespace {

std::vector<std::pair<Int, unsigned>> factors_of(std::initializer_list<std::pair<long, unsigned>> l) {
  std::vector<std::pair<Int, unsigned>> out;
  for (auto [q, e] : l) out.emplace_back(Int(q), e);
  return out;
}

void expect_sound(const Int& n, const TwoSquareCertificate& cert) {
  if (cert.member) {
    ASSERT_TRUE(cert.witness.has_value());
    EXPECT_FALSE(cert.obstruction.has_value());
    EXPECT_EQ(cert.witness->norm(), n);
    EXPECT_LE(0, cert.witness->re);
    EXPECT_LE(cert.witness->re, cert.witness->im);
  } else if (cert.obstruction) {
    EXPECT_FALSE(cert.witness.has_value());
    const Int& q = *cert.obstruction;
    EXPECT_EQ(mpz_fdiv_ui(q.get_mpz_t(), 4), 3u);
    // q^e divides n exactly with e odd.
    Int rest = n;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
      rest /= q;
      ++e;
    }
    EXPECT_EQ(e, cert.obstruction_exponent);
    EXPECT_EQ(e % 2, 1u);
  } else {
    EXPECT_LT(n, 0);
  }
}

}  // namespace

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(Int(746)).factors, factors_of({{2, 1}, {373, 1}}));
  EXPECT_TRUE(factorize(Int(1)).factors.empty());
  EXPECT_EQ(factorize(Int(363025)).factors, factors_of({{5, 2}, {13, 1}, {1117, 1}}));
  auto neg = factorize(Int(-12));
  EXPECT_EQ(neg.sign, -1);
  EXPECT_EQ(neg.factors, factors_of({{2, 2}, {3, 1}}));
  EXPECT_THROW(factorize(Int(0)), std::invalid_argument);
}

TEST(Factorize, AgreesWithTrialDivision) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ULL);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = dist(rng);
    auto got = factorize(from_u64(n));
    auto want = oracle::trial_factor(n);
    ASSERT_EQ(got.factors.size(), want.size()) << n;
    for (std::size_t k = 0; k < want.size(); ++k) {
      EXPECT_EQ(got.factors[k].first, from_u64(want[k].first));
      EXPECT_EQ(got.factors[k].second, want[k].second);
    }
  }
}

TEST(Factorize, ReconstructsRandom128BitProducts) {
  // Products of random factors below 2^40, so every cofactor splits within
  // the rho budget.
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::uint64_t> piece(2, (std::uint64_t{1} << 40) - 1);
  const Int limit = Int(1) << 128;
  for (int i = 0; i < 10'000; ++i) {
    Int n(1);
    while (true) {
      Int next = n * from_u64(piece(rng));
      if (next >= limit) break;
      n = next;
    }
    Factorization f = factorize(n);
    ASSERT_EQ(f.reconstruct(), n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      EXPECT_TRUE(detail::is_probable_prime(f.factors[k].first));
      EXPECT_GE(f.factors[k].second, 1u);
      if (k) {
        EXPECT_LT(f.factors[k - 1].first, f.factors[k].first);
      }
    }
  }
}

TEST(Factorize, UniformRandomWideInputs) {
  // Uniform values below 2^100; either factors completely or reports the
  // unsplit part, and the pieces always multiply back to n.
  std::mt19937_64 rng(107);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(107);
  for (int i = 0; i < 40; ++i) {
    Int n = gen.get_z_bits(100) + 1;
    try {
      EXPECT_EQ(factorize(n).reconstruct(), n);
    } catch (const EffortExceeded& e) {
      EXPECT_EQ(e.partial().reconstruct() * e.cofactor(), n);
    }
  }
}

TEST(Factorize, PrimeSquaresAndLargePrimes) {
  const Int p1("1000000000000000003");   // prime
  const Int p2("1000000000000000009");   // prime
  auto f = factorize(p1 * p1 * Int(3));
  EXPECT_EQ(f.factors, (std::vector<std::pair<Int, unsigned>>{{Int(3), 1}, {p1, 2}}));
  auto g = factorize(Int(1000003) * Int(1000033));
  EXPECT_EQ(g.factors.size(), 2u);
  EXPECT_TRUE(detail::is_probable_prime(p2));
  EXPECT_FALSE(detail::is_probable_prime(Int("3825123056546413051")));  // strong pseudoprime to 2..23
}

TEST(MillerRabin, AgreesWithSieveBelowAMillion) {
  const std::uint64_t limit = 1'000'000;
  std::vector<bool> composite(limit + 1, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t q = 2; q * q <= limit; ++q)
    if (!composite[q])
      for (std::uint64_t m = q * q; m <= limit; m += q) composite[m] = true;
  for (std::uint64_t n = 0; n <= limit; ++n) ASSERT_EQ(detail::is_prime_u64(n), !composite[n]) << n;
}

TEST(TonelliShanks, SquareRootOfMinusOne) {
  for (long q : {5L, 13L, 17L, 29L, 373L, 1117L, 40961L /* 2^13 * 5 + 1 */, 65537L}) {
    Int r = tonelli_shanks(Int(q - 1), Int(q));
    EXPECT_EQ(floor_mod(r * r + 1, Int(q)), 0) << q;
    EXPECT_EQ(prime_two_squares(Int(q)).norm(), q);
  }
  EXPECT_THROW(tonelli_shanks(Int(-1), Int(7)), std::domain_error);
}

TEST(IsSumTwoSquares, Examples) {
  auto c746 = is_sum_two_squares(Int(746));
  ASSERT_TRUE(c746.member);
  EXPECT_EQ(*c746.witness, GaussianInteger(Int(11), Int(25)));

  auto zero = is_sum_two_squares(Int(0));
  ASSERT_TRUE(zero.member);
  EXPECT_EQ(*zero.witness, GaussianInteger(Int(0), Int(0)));

  auto three = is_sum_two_squares(Int(3));
  EXPECT_FALSE(three.member);
  EXPECT_EQ(*three.obstruction, 3);
  EXPECT_EQ(three.obstruction_exponent, 1u);

  EXPECT_TRUE(is_sum_two_squares(Int(363025)).member);
  EXPECT_TRUE(oracle::brute_two_squares(363025).has_value());

  auto neg = is_sum_two_squares(Int(-5));
  EXPECT_FALSE(neg.member);
  EXPECT_TRUE(neg.negative());

  auto nine = is_sum_two_squares(Int(9 * 7 * 7));
  ASSERT_TRUE(nine.member);
  EXPECT_EQ(*nine.witness, GaussianInteger(Int(0), Int(21)));
}

TEST(IsSumTwoSquares, ExhaustiveEquivalenceToTenThousand) {
  // The acceptance suite runs the full range to 10^5.
  auto table = oracle::two_squares_table(10'000);
  for (std::int64_t n = 0; n <= 10'000; ++n) {
    auto cert = is_sum_two_squares(Int(n));
    ASSERT_EQ(cert.member, table[static_cast<std::size_t>(n)]) << n;
    ASSERT_EQ(is_sum_two_squares_member(Int(n)), cert.member) << n;
    expect_sound(Int(n), cert);
  }
}

TEST(IsSumTwoSquares, SoundOnLargeInputs) {
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<std::uint64_t> dist(1, ~std::uint64_t{0} >> 2);
  for (int i = 0; i < 3000; ++i) {
    Int n = from_u64(dist(rng));
    auto cert = is_sum_two_squares(n);
    expect_sound(n, cert);
    ASSERT_EQ(is_sum_two_squares_member(n), cert.member) << n;
  }
  // A 100-bit prime = 1 mod 4 times 13^2.
  Int big = Int("1000000000000000000000000000057") * Int(13) * Int(13);
  auto cert = is_sum_two_squares(big);
  expect_sound(big, cert);
}

TEST(CountB, CubePlusSeventeen) {
  auto p = validate_poly(0, 0, 17);
  EXPECT_EQ(count_b(p, Int(10)), 8u);
  EXPECT_EQ(count_b(p, Int(1)), 1u);
  // Per-n oracle check of the same range.
  std::uint64_t brute = 0;
  for (std::int64_t n = 1; n <= 10; ++n)
    if (oracle::brute_two_squares(n * n * n + 17)) ++brute;
  EXPECT_EQ(brute, 8u);
  EXPECT_FALSE(oracle::brute_two_squares(3 * 3 * 3 + 17));
  EXPECT_FALSE(oracle::brute_two_squares(5 * 5 * 5 + 17));
  EXPECT_THROW(count_b(p, Int(0)), std::invalid_argument);
}

TEST(CountB, NegativeValuesNeverCount) {
  // x^3 - 1000003 x^0 ... p(n) < 0 on [1, 99].
  auto p = validate_poly(0, 0, -1'000'003, ParityMode::kRelaxed);
  EXPECT_EQ(count_b(p, Int(99)), 0u);
}

TEST(CountB, MonotoneAndShardIndependent) {
  auto p = validate_poly(1, 1, 2);
  std::uint64_t prev = 0;
  for (long x = 1; x <= 400; x += 13) {
    std::uint64_t c = count_b(p, Int(x));
    EXPECT_GE(c, prev);
    prev = c;
  }
  const Int x(20'000);
  std::uint64_t one = count_b(p, x, 1);
  for (unsigned shards : {2u, 3u, 8u}) EXPECT_EQ(count_b(p, x, shards), one);
}
