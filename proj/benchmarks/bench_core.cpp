#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "cubicsym/cyclo.hpp"
#include "cubicsym/diffrank.hpp"
#include "cubicsym/forms.hpp"
#include "cubicsym/groups.hpp"
#include "cubicsym/invariants.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/reps.hpp"
#include "cubicsym/smooth.hpp"

using namespace cubicsym;

namespace {

std::string corpus(const std::string& rel) {
  return (std::filesystem::path(CUBICSYM_BENCH_CORPUS_DIR) / rel).string();
}

CycNum sample(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::map<long long, mpq_class> raw;
  for (unsigned e = 0; e < eulerPhi(n); ++e) raw[e] = c(rng);
  return CycNum::reduce(raw, n);
}

void BM_CycMul(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  std::mt19937 rng(1);
  CycNum a = sample(rng, n), b = sample(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(3)->Arg(12)->Arg(43)->Arg(96);

void BM_CycInv(benchmark::State& state) {
  unsigned n = static_cast<unsigned>(state.range(0));
  std::mt19937 rng(2);
  CycNum a = sample(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CycInv)->Arg(12)->Arg(43);

void BM_ApplyGenerator(benchmark::State& state) {
  Form f = loadForm(corpus("fivefolds/X17.form"));
  GroupFile g = loadGroup(corpus("fivefolds/X17.group"));
  unsigned n = lcmConductor(g.conductor, f.conductor());
  CycMatrix a = g.gens[0].embedded(n);
  Form fl = f.embedded(n);
  for (auto _ : state) benchmark::DoNotOptimize(apply(a, fl));
}
BENCHMARK(BM_ApplyGenerator);

void BM_Closure(benchmark::State& state) {
  GroupFile g = loadGroup(corpus(state.range(0) == 0 ? "fivefolds/X20.group" : "fivefolds/X3.group"));
  for (auto _ : state) benchmark::DoNotOptimize(MatGroup::closure(g.gens).order());
}
BENCHMARK(BM_Closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_InvariantForms(benchmark::State& state) {
  GroupFile g = loadGroup(corpus("extra/m96.group"));
  for (auto _ : state) benchmark::DoNotOptimize(invariantForms(g.gens, 3).dim());
}
BENCHMARK(BM_InvariantForms)->Unit(benchmark::kMillisecond);

void BM_IsSmoothKlein(benchmark::State& state) {
  Form f = loadForm(corpus("fivefolds/X20.form"));
  for (auto _ : state) benchmark::DoNotOptimize(isSmooth(f).status);
}
BENCHMARK(BM_IsSmoothKlein)->Unit(benchmark::kMillisecond);

void BM_CombinatorialNonSmooth(benchmark::State& state) {
  Form f = Form::fermat(6, 3).widened(7);
  for (auto _ : state) benchmark::DoNotOptimize(combinatorialNonSmooth(f).has_value());
}
BENCHMARK(BM_CombinatorialNonSmooth);

void BM_RankD(benchmark::State& state) {
  Form f = loadForm(corpus("fivefolds/X17.form"));
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rankD(f, order));
}
BENCHMARK(BM_RankD)->Arg(1)->Arg(2);

void BM_Canonicalize(benchmark::State& state) {
  RepClass c = makeRepClass(AbelianGroupSpec({45}), 3, {5, 35, 20, 9, 27, 36, 18});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(c));
}
BENCHMARK(BM_Canonicalize);

void BM_EnumerateCyclic(benchmark::State& state) {
  AbelianGroupSpec spec({static_cast<unsigned>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(enumerateDiagonalReps(spec, 7, 3).classes.size());
}
BENCHMARK(BM_EnumerateCyclic)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive holds LTO-only objects, so main lives here.
BENCHMARK_MAIN();
