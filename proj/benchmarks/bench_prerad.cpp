#include <benchmark/benchmark.h>

#include "prerad/construct.hpp"
#include "prerad/homs.hpp"
#include "prerad/products.hpp"
#include "prerad/ring.hpp"
#include "prerad/suites.hpp"
#include "prerad/universe.hpp"

using namespace prerad;

namespace {

const char* kRings[] = {"zn:4", "zn:6", "triangular:2:2", "matrix:2:2"};

UniverseOptions options_for(const std::string& ring) {
  UniverseOptions o;
  o.max_order = ring == "zn:6" ? 36 : 16;
  return o;
}

}  // namespace

// Hom(Z_n^2, Z_n^2) over zn:n.
static void BM_HomTables(benchmark::State& state) {
  auto n = state.range(0);
  auto ring = make_ring(std::string_view("zn:" + std::to_string(n)));
  auto m = parse_module(ring, "Z" + std::to_string(n) + "^2");
  std::size_t count = 0;
  for (auto _ : state) {
    auto hs = hom_tables(*m, *m);
    count = hs.size();
    benchmark::DoNotOptimize(hs);
  }
  state.counters["homs"] = static_cast<double>(count);
}
BENCHMARK(BM_HomTables)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_UniverseBuild(benchmark::State& state) {
  std::string spec = kRings[state.range(0)];
  auto ring = make_ring(std::string_view(spec));
  std::size_t members = 0;
  for (auto _ : state) {
    auto u = ModuleUniverse::build(ring, options_for(spec));
    members = u->size();
    benchmark::DoNotOptimize(u);
  }
  state.SetLabel(spec);
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_UniverseBuild)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// Coprime verdict on every member of the universe.
static void BM_CoprimeVerdict(benchmark::State& state) {
  std::string spec = kRings[state.range(0)];
  auto u = ModuleUniverse::build(make_ring(std::string_view(spec)), options_for(spec));
  for (auto _ : state)
    for (std::size_t i = 0; i < u->size(); ++i) benchmark::DoNotOptimize(coprime_verdict(u->member(i)));
  state.SetLabel(spec);
}
BENCHMARK(BM_CoprimeVerdict)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Totalizer(benchmark::State& state) {
  auto ring = make_ring(std::string_view("zn:8"));
  auto m = parse_module(ring, "Z2+Z8");
  auto subs = enumerate_submodules(m);
  for (auto _ : state)
    for (const auto& n : subs) benchmark::DoNotOptimize(totalizer(n));
  state.counters["submodules"] = static_cast<double>(subs.size());
}
BENCHMARK(BM_Totalizer)->Unit(benchmark::kMillisecond);

// One full report, universe included.
static void BM_SuitesAll(benchmark::State& state) {
  std::string spec = kRings[state.range(0)];
  auto ring = make_ring(std::string_view(spec));
  for (auto _ : state) benchmark::DoNotOptimize(run_suites(ring, options_for(spec), {"all"}));
  state.SetLabel(spec);
}
BENCHMARK(BM_SuitesAll)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
