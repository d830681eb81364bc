#include "chatelet/constructor.hpp"
#include "chatelet/transfer.hpp"
#include "chatelet/two_squares.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chatelet;

TEST(GaussianNormProduct, ConstantSections) {
  auto p = validate_poly(1, 1, 2);
  EXPECT_EQ(gaussian_norm_product(p, ThetaElem(1, 0, 0), ThetaElem()), GaussianInteger(Int(1)));
  EXPECT_EQ(gaussian_norm_product(p, ThetaElem(7, 0, 0), ThetaElem()), GaussianInteger(Int(343)));
  EXPECT_EQ(gaussian_norm_product(p, ThetaElem(), ThetaElem(1, 0, 0)),
            GaussianInteger(Int(0), Int(-1)));  // i^3
}

TEST(GaussianNormProduct, NormMatchesRingNormOfSquareSum) {
  std::mt19937_64 rng(201);
  for (int k = 0; k < 5; ++k) {
    auto p = oracle::random_family_cubic(rng);
    for (int i = 0; i < 200; ++i) {
      auto w1 = oracle::random_theta(rng, 10'000);
      auto w2 = oracle::random_theta(rng, 10'000);
      GaussianInteger uv = gaussian_norm_product(p, w1, w2);
      ASSERT_EQ(uv.norm(), norm(p, square_sum_expand(p, w1, w2)));
    }
  }
}

TEST(GaussianNormProduct, NegatingOmegaTwoConjugates) {
  std::mt19937_64 rng(203);
  auto p = oracle::random_family_cubic(rng);
  for (int i = 0; i < 200; ++i) {
    auto w1 = oracle::random_theta(rng, 10'000);
    auto w2 = oracle::random_theta(rng, 10'000);
    EXPECT_EQ(gaussian_norm_product(p, w1, -w2), gaussian_norm_product(p, w1, w2).conj());
  }
}

TEST(GaussianNormProduct, ProductOverRealRootMatchesNumerically) {
  // x^3 - 7x + 1 has three real roots, so P1 can be evaluated in doubles.
  auto p = validate_poly(0, -7, 1, ParityMode::kRelaxed);
  const double roots[] = {-2.7144787443878, 0.1432773218396, 2.5712014225481};
  ThetaElem w1(3, -1, 2), w2(-1, 4, 1);
  double re = 1, im = 0;
  for (double t : roots) {
    double a = 3 - t + 2 * t * t, b = -1 + 4 * t + t * t;
    double nr = re * a - im * b, ni = re * b + im * a;
    re = nr;
    im = ni;
  }
  auto uv = gaussian_norm_product(p, w1, w2);
  EXPECT_NEAR(uv.re.get_d(), re, 1e-6 * std::abs(re) + 1e-6);
  EXPECT_NEAR(uv.im.get_d(), im, 1e-6 * std::abs(im) + 1e-6);
  EXPECT_EQ(uv, GaussianInteger(Int(1123), Int(622)));
}

TEST(CertifyTransfer, WorkedExample) {
  auto p = validate_poly(1, 1, 2);
  Solution s = complete(p, Int(2), Int(1), Int(1));
  GaussianInteger uv = certify_transfer(p, s);
  EXPECT_EQ(uv.norm(), 363025);
  EXPECT_TRUE(is_sum_two_squares(p(s.n)).member);
}

TEST(CertifyTransfer, ThousandConsecutiveFamilyMembers) {
  auto p = validate_poly(0, 0, 3);
  auto sols = collect_family(p, Int("1000000000000000"), Rational(1));
  ASSERT_GE(sols.size(), 1000u);
  sols.resize(1000);
  for (const auto& s : sols) {
    GaussianInteger uv = certify_transfer(p, s);
    ASSERT_EQ(uv.norm(), p(s.n));
    ASSERT_GE(sgn(p(s.n)), 0);
  }
  // Oracle agreement on the ones small enough to factor quickly.
  int checked = 0;
  for (const auto& s : sols) {
    if (abs(s.n) > 1'000'000) continue;
    EXPECT_TRUE(is_sum_two_squares(p(s.n)).member) << s.n;
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(CertifyTransfer, DetectsTamperedSolution) {
  auto p = validate_poly(1, 1, 2);
  Solution s = complete(p, Int(2), Int(1), Int(1));
  s.n += 1;
  EXPECT_THROW(certify_transfer(p, s), TransferMismatch);
}
