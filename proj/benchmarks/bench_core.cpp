#include <benchmark/benchmark.h>

#include <random>

#include "tgkz/binomial_ideals.hpp"
#include "tgkz/groebner.hpp"
#include "tgkz/group_lattice.hpp"
#include "tgkz/hypergeometric.hpp"
#include "tgkz/rank_duality.hpp"
#include "tgkz/semigroup_modules.hpp"

using namespace tgkz;

namespace {

PointConfig z4_config() {
  AbelianGroup g({4}, 1);
  return PointConfig(g, {GroupElement::make(g, {1}, {1}), GroupElement::make(g, {1}, {2})});
}

PointConfig z3_plane() {
  AbelianGroup g({3}, 2);
  return PointConfig(g, {GroupElement::make(g, {1}, {1, 0}), GroupElement::make(g, {0}, {1, 1}),
                         GroupElement::make(g, {2}, {1, 2})});
}

PointConfig square_22() {
  AbelianGroup g({2, 2}, 2);
  return PointConfig(g, {GroupElement::make(g, {1, 0}, {1, 0}), GroupElement::make(g, {0, 1}, {0, 1}),
                         GroupElement::make(g, {1, 1}, {1, 1}), GroupElement::make(g, {0, 0}, {2, 1})});
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5)->Arg(8);

static void BM_Buchberger(benchmark::State& state) {
  std::vector<Polynomial> gens{parse_polynomial("d1^2*d2 - d3^2", 3), parse_polynomial("d2^3 - d1*d3", 3),
                               parse_polynomial("d1*d3 - d2^2 + d1", 3), parse_polynomial("d3^3 - d1*d2", 3)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, 3));
}
BENCHMARK(BM_Buchberger);

static void BM_MinimalPrimes(benchmark::State& state) {
  auto config = z4_config();
  for (auto _ : state) benchmark::DoNotOptimize(minimal_primes_IcalA(config));
}
BENCHMARK(BM_MinimalPrimes);

static void BM_ModuleGenerators(benchmark::State& state) {
  auto module = state.range(0) == 0 ? SemigroupModule::full(square_22()) : SemigroupModule::interior(square_22());
  for (auto _ : state) benchmark::DoNotOptimize(module_generators(module));
}
BENCHMARK(BM_ModuleGenerators)->Arg(0)->Arg(1);

static void BM_PrimitivePresentation(benchmark::State& state) {
  auto module = SemigroupModule::full(state.range(0) == 0 ? z4_config() : z3_plane());
  std::vector<Cyclotomic> beta(module.config().d(), Cyclotomic(Rational(1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(bbgkz_primitive_presentation(module, beta));
}
BENCHMARK(BM_PrimitivePresentation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CharacterSplit(benchmark::State& state) {
  auto config = square_22();
  for (auto _ : state) benchmark::DoNotOptimize(character_split(config, 6));
}
BENCHMARK(BM_CharacterSplit)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
