#include <gtest/gtest.h>

#include <random>

#include "permlab/equivalence.hpp"

using namespace permlab;

namespace {

Fe fe(std::uint64_t i) { return Fe{static_cast<std::uint32_t>(i)}; }

Mobius random_mobius(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    const Mobius m{fe(rng() % f.order()), fe(rng() % f.order()), fe(rng() % f.order()), fe(rng() % f.order())};
    if (f.mul(m.a, m.d) != f.mul(m.b, m.c)) return m;
  }
}

bool same_function(const RationalFn& a, const RationalFn& b) {
  if (a.field().order() != b.field().order()) return false;
  for (std::uint32_t i = 0; i < a.field().order(); ++i)
    if (!(a.eval(Fe{i}) == b.eval(Fe{i}))) return false;
  return a.eval(PointP1::inf()) == b.eval(PointP1::inf());
}

}  // namespace

TEST(Classifier, Examples) {
  const auto c2 = QuadExt::build(2);
  EXPECT_EQ(EquivalenceClassifier(c2).classify({fe(0), fe(0), fe(1), fe(0)}).tag, EquivClass::MonomialQ2);

  const auto c3 = QuadExt::build(3);
  const EquivalenceClassifier k3(c3);
  const QuarticCoeffs cube{fe(0), fe(0), fe(0), c3->ext().generator()};
  const auto r = k3.classify(cube);
  EXPECT_EQ(r.tag, EquivClass::CubePair);
  EXPECT_TRUE(verify_equivalence(*c3, cube, r));

  const auto c4 = QuadExt::build(4);
  const EquivalenceClassifier k4(c4);
  std::mt19937_64 rng(2);
  int seen = 0;
  while (seen < 5) {
    const QuarticCoeffs co{fe(rng() % 16), fe(rng() % 16), fe(rng() % 16), fe(rng() % 16)};
    if (k4.evaluator().is_permutation(co)) continue;
    EXPECT_EQ(k4.classify(co).tag, EquivClass::NotPermutation);
    ++seen;
  }
  EXPECT_THROW(EquivalenceClassifier(QuadExt::build(11)), CapExceeded);
}

TEST(Classifier, ExhaustiveSmall) {
  for (std::uint64_t q : {2, 3}) {
    const auto ctx = QuadExt::build(q);
    const EquivalenceClassifier k(ctx);
    const std::uint32_t n = static_cast<std::uint32_t>(q * q);
    std::uint64_t perms = 0;
    for (std::uint64_t i = 0; i < std::uint64_t{n} * n * n * n; ++i) {
      const QuarticCoeffs co{fe(i % n), fe(i / n % n), fe(i / n / n % n), fe(i / n / n / n)};
      const auto r = k.classify(co);
      if (!k.evaluator().is_permutation(co)) {
        ASSERT_EQ(r.tag, EquivClass::NotPermutation);
        continue;
      }
      ++perms;
      ASSERT_NE(r.tag, EquivClass::Unclassified) << q << " #" << i;
      ASSERT_NE(r.tag, EquivClass::NotPermutation);
      ASSERT_TRUE(verify_equivalence(*ctx, co, r));
    }
    EXPECT_GT(perms, 0u);
  }
}

TEST(Classifier, TamperedWitnessFailsVerification) {
  const auto c3 = QuadExt::build(3);
  const EquivalenceClassifier k(c3);
  const QuarticCoeffs cube{fe(0), fe(0), fe(0), fe(1)};
  auto r = k.classify(cube);
  ASSERT_EQ(r.tag, EquivClass::CubePair);
  r.pair_rho.a = c3->ext().add(r.pair_rho.a, fe(1));
  EXPECT_FALSE(verify_equivalence(*c3, cube, r));
}

TEST(Classifier, TwistedClassAppearsInCharThree) {
  const auto c3 = QuadExt::build(3);
  const EquivalenceClassifier k(c3);
  const std::uint32_t n = 9;
  bool twisted = false;
  for (std::uint64_t i = 0; i < std::uint64_t{n} * n * n * n && !twisted; ++i) {
    const QuarticCoeffs co{fe(i % n), fe(i / n % n), fe(i / n / n % n), fe(i / n / n / n)};
    const auto r = k.classify(co, true);
    for (auto t : r.matches) twisted = twisted || t == EquivClass::TwistedCubePair;
    if (!r.matches.empty()) EXPECT_EQ(r.matches.front(), r.tag);
  }
  EXPECT_TRUE(twisted);
}

TEST(Classifier, RepresentationIndependent) {
  const std::uint64_t q = 3;
  const auto mods = irreducible_polynomials(3, 2, 3);
  const auto a = QuadExt::build(q, mods[0]);
  const auto b = QuadExt::build(q, mods[2]);
  const auto isos = field_isomorphisms(a->ext(), b->ext());
  ASSERT_FALSE(isos.empty());
  const auto& phi = isos.front();
  const EquivalenceClassifier ka(a), kb(b);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 400; ++t) {
    const QuarticCoeffs co{fe(rng() % 9), fe(rng() % 9), fe(rng() % 9), fe(rng() % 9)};
    const QuarticCoeffs mapped{phi[co.a.id], phi[co.b.id], phi[co.c.id], phi[co.d.id]};
    const auto ra = ka.classify(co, true), rb = kb.classify(mapped, true);
    EXPECT_EQ(ra.tag, rb.tag);
    EXPECT_EQ(ra.matches, rb.matches);
    EXPECT_EQ(complete_mapping_conditions(*a, co), complete_mapping_conditions(*b, mapped));
    EXPECT_EQ(trinomial_predicate(*a, co.a, co.b), trinomial_predicate(*b, mapped.a, mapped.b));
  }
}

TEST(Mobius, GroupOperations) {
  const auto f5 = Field::build({5, 1});
  const auto all = pgl2(*f5);
  EXPECT_EQ(all.size(), 5u * 24u);
  EXPECT_EQ(pgl2(*Field::build({2, 2})).size(), 4u * 15u);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Mobius m = random_mobius(*f5, rng), n = random_mobius(*f5, rng);
    const Mobius mn = mobius_compose(*f5, m, n), mi = mobius_inverse(*f5, m);
    for (std::uint32_t i = 0; i <= 5; ++i) {
      const PointP1 x = i == 5 ? PointP1::inf() : PointP1::at(Fe{i});
      EXPECT_EQ(mobius_apply(*f5, mn, x), mobius_apply(*f5, m, mobius_apply(*f5, n, x)));
      EXPECT_EQ(mobius_apply(*f5, mi, mobius_apply(*f5, m, x)), x);
    }
  }
}

TEST(Normalize, Examples) {
  const auto f5 = Field::build({5, 1});
  const RationalFn x3 = RationalFn::from_poly(Poly::monomial(f5, fe(1), 3));
  EXPECT_EQ(normalize_cubic_rational(x3).cls, CubicClass::Cube);

  const auto f3 = Field::build({3, 1});
  const RationalFn dep = RationalFn::from_poly(Poly::monomial(f3, fe(1), 3) - Poly::monomial(f3, fe(2), 1));
  const auto nf = normalize_cubic_rational(dep);
  ASSERT_EQ(nf.cls, CubicClass::DepressedCube);
  EXPECT_TRUE(f3->is_nonsquare(nf.alpha));
  ASSERT_TRUE(nf.canonical);
  EXPECT_TRUE(same_function(compose_mobius(nf.rho, dep, nf.eta), *nf.canonical));

  EXPECT_THROW(normalize_cubic_rational(RationalFn::from_poly(Poly::monomial(f5, fe(1), 2))), DomainError);
  EXPECT_THROW(normalize_cubic_rational(RationalFn::from_poly(Poly::monomial(Field::build({11, 1}), fe(1), 3))),
               CapExceeded);
}

TEST(Normalize, DressedCubesRecovered) {
  std::mt19937_64 rng(12);
  for (std::uint64_t q : {2, 3, 5, 8}) {
    const auto f = Field::build(*as_prime_power(q));
    const RationalFn x3 = RationalFn::from_poly(Poly::monomial(f, fe(1), 3));
    for (int t = 0; t < 6; ++t) {
      const RationalFn h = compose_mobius(random_mobius(*f, rng), x3, random_mobius(*f, rng));
      const auto nf = normalize_cubic_rational(h);
      if (q % 3 == 0) {
        EXPECT_NE(nf.cls, CubicClass::Unclassified);
      } else {
        EXPECT_EQ(nf.cls, CubicClass::Cube);
      }
      ASSERT_TRUE(nf.canonical);
      EXPECT_TRUE(same_function(compose_mobius(nf.rho, h, nf.eta), *nf.canonical));
    }
  }
}

TEST(Normalize, NuConjugatedCubeAtSeven) {
  const auto ctx = QuadExt::build(7);
  Fe delta{};
  for (std::uint32_t i = 0; i < 49; ++i)
    if (!ctx->in_base(Fe{i})) {
      delta = Fe{i};
      break;
    }
  const RationalFn k = nu_conjugated_cube(*ctx, delta);
  EXPECT_EQ(k.degree(), 3);
  EXPECT_TRUE(rational_permutes_p1(k));
  EXPECT_THROW(nu_conjugated_cube(*ctx, fe(1)), DomainError);
  std::mt19937_64 rng(13);
  const Field& K = ctx->base();
  for (int t = 0; t < 4; ++t) {
    const RationalFn h = compose_mobius(random_mobius(K, rng), k, random_mobius(K, rng));
    const auto nf = normalize_cubic_rational(h, ctx);
    ASSERT_EQ(nf.cls, CubicClass::NuConjugatedCube);
    ASSERT_TRUE(nf.canonical);
    EXPECT_TRUE(same_function(compose_mobius(nf.rho, h, nf.eta), *nf.canonical));
  }
}

TEST(Normalize, AllCubicPolynomialPermutations) {
  for (std::uint64_t q : {3, 5, 8, 9}) {
    const auto f = Field::build(*as_prime_power(q));
    std::uint64_t perms = 0;
    for (std::uint32_t c3 = 1; c3 < q; ++c3)
      for (std::uint32_t c2 = 0; c2 < q; ++c2)
        for (std::uint32_t c1 = 0; c1 < q; ++c1) {
          const RationalFn h = RationalFn::from_poly(Poly(f, {fe(0), Fe{c1}, Fe{c2}, Fe{c3}}));
          if (!rational_permutes_p1(h)) continue;
          ++perms;
          const auto nf = normalize_cubic_rational(h);
          if (q % 3 == 0) {
            ASSERT_NE(nf.cls, CubicClass::Unclassified);
          } else {
            ASSERT_EQ(nf.cls, CubicClass::Cube);
          }
        }
    EXPECT_GT(perms, 0u);
  }
}
