#include <benchmark/benchmark.h>

#include "turan_forge/constructions.hpp"
#include "turan_forge/gridsearch.hpp"
#include "turan_forge/poly.hpp"
#include "turan_forge/rng.hpp"
#include "turan_forge/theta.hpp"

using namespace turan_forge;

namespace {

constructions::ConstructionResult build(constructions::Family family,
                                        std::uint64_t p, unsigned s,
                                        unsigned t) {
  constructions::ConstructionSpec spec;
  spec.family = family;
  spec.p = p;
  spec.s = s;
  spec.t = t;
  return constructions::build_graph(spec);
}

void BM_BuildErdosRenyi(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto built = build(constructions::Family::ErdosRenyi, p, 2, 2);
    benchmark::DoNotOptimize(built.graph.edge_count());
  }
}
BENCHMARK(BM_BuildErdosRenyi)->Arg(13)->Arg(31);

void BM_BuildNormGraph(benchmark::State& state) {
  for (auto _ : state) {
    auto built = build(constructions::Family::NormGraph,
                       static_cast<std::uint64_t>(state.range(0)), 2, 2);
    benchmark::DoNotOptimize(built.graph.edge_count());
  }
}
BENCHMARK(BM_BuildNormGraph)->Arg(7)->Arg(11);

void BM_FindKst(benchmark::State& state) {
  const auto built = build(constructions::Family::ErdosRenyi,
                           static_cast<std::uint64_t>(state.range(0)), 2, 2);
  for (auto _ : state) {
    auto outcome = gridsearch::find_kst(built.graph, 2, 2);
    benchmark::DoNotOptimize(outcome.subsets_examined);
  }
}
BENCHMARK(BM_FindKst)->Arg(7)->Arg(11);

void BM_Girth(benchmark::State& state) {
  const auto built = build(constructions::Family::Wenger, 3, 2, 3);
  for (auto _ : state) {
    auto g = gridsearch::girth(built.graph);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_Girth);

void BM_ThetaPoly(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto theta = theta::theta_poly(p, 2);
    benchmark::DoNotOptimize(theta.poly.term_count());
  }
}
BENCHMARK(BM_ThetaPoly)->Arg(11)->Arg(19);

void BM_PackedEval(benchmark::State& state) {
  // Dense bivariate polynomial of degree 12 mod 149, evaluated on a grid.
  poly::Polynomial f(2, 149);
  Rng rng(42);
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; a + b <= 12; ++b)
      f.add_term({a, b}, static_cast<long>(rng.below(149)));
  const poly::PackedEvaluator eval(f, 149);
  std::uint64_t x = 1;
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t y = 0; y < 149; ++y) {
      const std::uint64_t point[2] = {x, y};
      acc ^= eval.eval(point);
    }
    benchmark::DoNotOptimize(acc);
    x = x % 148 + 1;
  }
}
BENCHMARK(BM_PackedEval);

}  // namespace

BENCHMARK_MAIN();
