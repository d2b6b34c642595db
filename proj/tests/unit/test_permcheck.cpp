#include <gtest/gtest.h>

#include <random>

#include "permlab/combinat.hpp"
#include "permlab/permcheck.hpp"

using namespace permlab;

namespace {

Poly mono(const FieldPtr& f, std::uint32_t c, std::size_t e) { return Poly::monomial(f, Fe{c}, e); }

}  // namespace

TEST(BruteForce, Permutations) {
  const auto f4 = Field::build({2, 2});
  EXPECT_TRUE(is_permutation_poly(Poly::x(f4)));
  EXPECT_TRUE(is_permutation_poly(mono(f4, 1, 4)));
  EXPECT_FALSE(is_permutation_poly(mono(f4, 1, 3)));
  const auto f3 = Field::build({3, 1});
  EXPECT_FALSE(is_permutation_poly(mono(f3, 1, 9) + mono(f3, 1, 5) + mono(f3, 1, 2)));
}

TEST(BruteForce, CompleteMappings) {
  const auto f4 = Field::build({2, 2});
  EXPECT_TRUE(is_complete_mapping(mono(f4, 2, 1)));
  EXPECT_FALSE(is_complete_mapping(Poly::x(f4)));
  EXPECT_TRUE(is_complete_mapping(mono(f4, 2, 4)));
}

TEST(Hermite, SmallCases) {
  const auto f3 = Field::build({3, 1});
  EXPECT_TRUE(hermite_is_permutation(Poly::x(f3)));
  EXPECT_FALSE(hermite_is_permutation(mono(f3, 1, 2)));
  EXPECT_FALSE(hermite_is_permutation(Poly::constant(f3, Fe{1})));
}

TEST(Hermite, AgreesWithBruteForce) {
  std::mt19937_64 rng(99);
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    const auto f = Field::build(*as_prime_power(q));
    int perms = 0;
    for (int t = 0; t < 400; ++t) {
      std::vector<Fe> c(q);
      for (auto& x : c) x = Fe{static_cast<std::uint32_t>(rng() % q)};
      if (t % 4 == 0) {
        std::fill(c.begin(), c.end(), Fe{0});
        c[1 + rng() % (q - 1)] = Fe{static_cast<std::uint32_t>(1 + rng() % (q - 1))};
      }
      const Poly p(f, c);
      const bool bf = is_permutation_poly(p);
      perms += bf;
      EXPECT_EQ(hermite_is_permutation(p), bf);
    }
    EXPECT_GT(perms, 0);
  }
}

TEST(Bivariate, Examples) {
  const auto f2 = Field::build({2, 1});
  EXPECT_TRUE(bivariate_is_bijection(*f2, [](Fe x, Fe y) { return std::pair{x, y}; }));
  EXPECT_TRUE(bivariate_is_bijection(*f2, [&](Fe x, Fe y) {
    const Fe x3 = f2->pow(x, 3), y3 = f2->pow(y, 3);
    return std::pair{f2->add(f2->add(x3, x), y), f2->add(y3, x)};
  }));
  const auto f3 = Field::build({3, 1});
  EXPECT_TRUE(bivariate_is_bijection(*f3, [&](Fe x, Fe y) { return std::pair{f3->pow(x, 3), f3->pow(y, 3)}; }));
  EXPECT_FALSE(bivariate_is_bijection(*f3, [&](Fe x, Fe) { return std::pair{x, x}; }));
}

TEST(Rational, EvalAndPermutes) {
  const auto ctx = QuadExt::build(2);
  const FieldPtr F = ctx->ext_ptr();
  EXPECT_TRUE(rational_permutes_mu(RationalFn::from_poly(Poly::x(F)), *ctx));
  const auto f3 = Field::build({3, 1});
  const RationalFn h = RationalFn::from_poly(mono(f3, 1, 3) - mono(f3, 2, 1));
  EXPECT_TRUE(rational_permutes_p1(h));
  EXPECT_FALSE(rational_permutes_p1(RationalFn::from_poly(mono(f3, 1, 2))));
  const RationalFn inv(Poly::constant(f3, Fe{1}), Poly::x(f3));
  EXPECT_TRUE(inv.eval(Fe{0}).infinite);
  EXPECT_EQ(inv.eval(PointP1::inf()), PointP1::at(Fe{0}));
  EXPECT_TRUE(rational_permutes_p1(inv));
  const RationalFn lt(Poly(f3, {Fe{1}, Fe{2}}), Poly(f3, {Fe{2}, Fe{2}}));
  EXPECT_EQ(lt.eval(PointP1::inf()), PointP1::at(Fe{1}));
  EXPECT_THROW(RationalFn(Poly::x(f3), Poly(f3)), DomainError);
}

TEST(Rational, LowestTerms) {
  const auto f5 = Field::build({5, 1});
  const Poly x = Poly::x(f5), one = Poly::constant(f5, Fe{1});
  const RationalFn r((x - one) * (x + one), (x - one).scale(Fe{3}));
  EXPECT_EQ(r.degree(), 1);
  EXPECT_EQ(r.den(), Poly::constant(f5, Fe{1}));
}

TEST(CoeffProfile, EvenClosedForm) {
  std::mt19937_64 rng(8);
  for (std::uint64_t q : {8, 16}) {
    const auto ctx = QuadExt::build(q);
    const FieldPtr F = ctx->ext_ptr();
    for (int t = 0; t < 10; ++t) {
      const Fe b{static_cast<std::uint32_t>(1 + rng() % (q * q - 1))};
      const Fe c{static_cast<std::uint32_t>(rng() % (q * q))};
      const Poly f = Poly::monomial(F, Fe{1}, q + 2) + Poly::monomial(F, b, q) + Poly::monomial(F, c, 1);
      const Fe v = coeff_profile(f, 2 * q - 1);
      EXPECT_EQ(v, F->pow(b, 3 * q / 2));
      EXPECT_NE(v, F->zero());
    }
  }
}

TEST(CoeffProfile, OddClosedForm) {
  std::mt19937_64 rng(9);
  for (std::uint64_t q : {5, 7}) {
    const auto ctx = QuadExt::build(q);
    const FieldPtr F = ctx->ext_ptr();
    const std::uint64_t h = (q - 1) / 2;
    const BigInt m = multinomial_exact(q - 1, {h, h});
    const Fe k = F->from_int(static_cast<std::int64_t>(m % q));
    for (int t = 0; t < 10; ++t) {
      const Fe b{static_cast<std::uint32_t>(1 + rng() % (q * q - 1))};
      const Fe c{static_cast<std::uint32_t>(rng() % (q * q))};
      const Poly f = Poly::monomial(F, Fe{1}, q + 2) + Poly::monomial(F, b, q) + Poly::monomial(F, c, 1);
      EXPECT_EQ(coeff_profile(f, q - 1), F->mul(k, F->pow(b, h)));
    }
  }
}

TEST(CoeffProfile, LowDegreeIsZero) {
  const auto f = Field::build({3, 2});
  EXPECT_EQ(coeff_profile(Poly::monomial(f, Fe{1}, 2), 3), Fe{0});
}
