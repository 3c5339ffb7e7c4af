#include <benchmark/benchmark.h>

#include "arbor/automaton.hpp"
#include "arbor/hecke.hpp"
#include "arbor/parabolic.hpp"
#include "arbor/permgroup.hpp"
#include "arbor/quotient.hpp"

namespace {

using namespace arbor;

void BM_SchreierSims(benchmark::State& state, const char* group, int level) {
  SelfSimilarGroup g(builtin(group));
  Quotients q(g);
  const auto gens = q.generator_images(level);
  for (auto _ : state) {
    PermGroup pg(TreeShape{g.degree(), level}, gens);
    benchmark::DoNotOptimize(pg.order());
  }
}
BENCHMARK_CAPTURE(BM_SchreierSims, grigorchuk_6, "grigorchuk", 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SchreierSims, grigorchuk_8, "grigorchuk", 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SchreierSims, gamma_5, "gamma", 5)->Unit(benchmark::kMillisecond);

void BM_IsTrivial(benchmark::State& state) {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Word w = g.word("(a d a c a c)^4");
  for (int i = 0; i < state.range(0); ++i) w = concat(w, g.word("a b a b a c"));
  w = concat(w, inverse(concat(g.word("e"), Word(w.end() - 6 * state.range(0), w.end()))));
  for (auto _ : state) {
    g.clear_memo();
    benchmark::DoNotOptimize(g.is_trivial(w));
  }
}
BENCHMARK(BM_IsTrivial)->Arg(1)->Arg(8)->Arg(32);

void BM_OrbitalsGelfand(benchmark::State& state, const char* group, int level) {
  SelfSimilarGroup g(builtin(group));
  Quotients q(g);
  q.ambient(level);
  for (auto _ : state) {
    const OrbitalSet o = orbitals(q, default_ray(g.degree()), level);
    benchmark::DoNotOptimize(check_gelfand(o));
  }
}
BENCHMARK_CAPTURE(BM_OrbitalsGelfand, grigorchuk_8, "grigorchuk", 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OrbitalsGelfand, gamma_5, "gamma", 5)->Unit(benchmark::kMillisecond);

void BM_Degrees(benchmark::State& state) {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const OrbitalSet o = orbitals(q, default_ray(2), 6);
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_degrees(o, 2).degrees);
}
BENCHMARK(BM_Degrees)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
