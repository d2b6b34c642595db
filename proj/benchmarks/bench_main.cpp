#include <benchmark/benchmark.h>

#include "permlab/combinat.hpp"
#include "permlab/equivalence.hpp"
#include "permlab/mureduce.hpp"
#include "permlab/permcheck.hpp"
#include "permlab/theorems.hpp"

using namespace permlab;

namespace {

Fe fe(std::uint64_t i) { return Fe{static_cast<std::uint32_t>(i)}; }

void BM_FieldMul(benchmark::State& st) {
  const auto f = Field::build(*as_prime_power(static_cast<std::uint64_t>(st.range(0))));
  const std::uint32_t n = static_cast<std::uint32_t>(f->order());
  std::uint32_t i = 1;
  Fe acc = f->one();
  for (auto _ : st) {
    acc = f->mul(acc, Fe{1 + i % (n - 1)});
    acc = f->add(acc, Fe{i % n});
    ++i;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(256)->Arg(6561)->Arg(65536)->Arg(1 << 22);

void BM_PowReduce(benchmark::State& st) {
  const auto ctx = QuadExt::build(static_cast<std::uint64_t>(st.range(0)));
  const std::uint64_t q = ctx->q();
  const Poly f = Poly::monomial(ctx->ext_ptr(), fe(1), q + 2) + Poly::monomial(ctx->ext_ptr(), fe(3), q) +
                 Poly::x(ctx->ext_ptr());
  for (auto _ : st) benchmark::DoNotOptimize(pow_reduce(f, 2 * q - 1, q * q));
}
BENCHMARK(BM_PowReduce)->Arg(4)->Arg(8)->Arg(16);

void BM_Hermite(benchmark::State& st) {
  const auto f = Field::build(*as_prime_power(static_cast<std::uint64_t>(st.range(0))));
  std::vector<Fe> c(f->order(), fe(0));
  c[1] = fe(1);
  c[3] = fe(2);
  const Poly p(f, c);
  for (auto _ : st) benchmark::DoNotOptimize(hermite_is_permutation(p));
}
BENCHMARK(BM_Hermite)->Arg(9)->Arg(16)->Arg(25);

void BM_QuarticPermutation(benchmark::State& st) {
  const auto ctx = QuadExt::build(static_cast<std::uint64_t>(st.range(0)));
  const QuarticEvaluator ev(ctx);
  const std::uint32_t n = static_cast<std::uint32_t>(ctx->ext().order());
  std::uint64_t i = 0;
  for (auto _ : st) {
    const QuarticCoeffs co{fe(i % n), fe(i * 7 % n), fe(i * 13 % n), fe(i * 29 % n)};
    benchmark::DoNotOptimize(ev.is_complete_mapping(co));
    ++i;
  }
}
BENCHMARK(BM_QuarticPermutation)->Arg(5)->Arg(9)->Arg(16);

void BM_MuChain(benchmark::State& st) {
  const auto ctx = QuadExt::build(static_cast<std::uint64_t>(st.range(0)));
  const QuarticCoeffs co{fe(3), fe(1), fe(2), fe(5)};
  const XrBForm form = quartic_form(*ctx, co);
  for (auto _ : st) benchmark::DoNotOptimize(mu_rational_criterion(form, *ctx));
}
BENCHMARK(BM_MuChain)->Arg(5)->Arg(9)->Arg(27);

void BM_ConjugacyTable(benchmark::State& st) {
  const auto ctx = QuadExt::build(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ConjugacyTable(ctx, 9).size());
}
BENCHMARK(BM_ConjugacyTable)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& st) {
  const auto ctx = QuadExt::build(static_cast<std::uint64_t>(st.range(0)));
  const EquivalenceClassifier cls(ctx);
  const QuarticCoeffs co{fe(0), fe(0), fe(0), ctx->ext().generator()};
  for (auto _ : st) benchmark::DoNotOptimize(cls.classify(co).tag);
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_PairBijection(benchmark::State& st) {
  const auto f = Field::build(*as_prime_power(static_cast<std::uint64_t>(st.range(0))));
  const PairCoeffs co{fe(0), fe(1), fe(0), fe(2), fe(1)};
  for (auto _ : st)
    benchmark::DoNotOptimize(bivariate_is_bijection(*f, [&](Fe x, Fe y) { return pair_map_apply(*f, co, x, y); }));
}
BENCHMARK(BM_PairBijection)->Arg(9)->Arg(27)->Arg(81);

void BM_TupleCheck(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(base3_tuple_check(TupleFamily::Five, static_cast<unsigned>(st.range(0))).admissible);
}
BENCHMARK(BM_TupleCheck)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
