#include <benchmark/benchmark.h>

#include "superchar/charring.hpp"
#include "superchar/ds.hpp"
#include "superchar/enumerate.hpp"

using namespace superchar;

namespace {

Weight gl22_block(long long s, long long i) {
  Weight b1 = eps_vec(2, 2, 1) - delta_vec(2, 2, 2);
  Weight b2 = eps_vec(2, 2, 2) - delta_vec(2, 2, 1);
  Weight out = Weight::zero(2, 2);
  out += Rat(s) * (b1 + b2);
  out += Rat(i) * b1;
  return out;
}

void bm_normalize(benchmark::State& state) {
  Algebra g = Algebra::make(Kind::OspEven, 3, 3);
  Weight mu = Weight::zero(3, 3);
  mu.eps = {Rat(-4), Rat(7), Rat(1)};
  mu.delta = {Rat(2), Rat(-5), Rat(9)};
  for (auto _ : state) benchmark::DoNotOptimize(g.weyl_orbit_normalize(mu));
}
BENCHMARK(bm_normalize);

void bm_kw_char(benchmark::State& state) {
  Algebra g = Algebra::make(Kind::OspEven, 3, 3);
  Weight lam = module_weight_of(g, parse_diagram(g, "x^2ox"));
  DaggerData d = dagger(g, lam);
  for (auto _ : state) benchmark::DoNotOptimize(kw_char(g, d.dagger, d.iso));
}
BENCHMARK(bm_kw_char);

void bm_block_graph(benchmark::State& state) {
  Algebra g = Algebra::make(Kind::GL, 3, 3);
  Weight seed = module_weight_of(g, parse_diagram(g, "0xoxox"));
  for (auto _ : state) benchmark::DoNotOptimize(build_block_graph(g, {seed}, 0));
}
BENCHMARK(bm_block_graph);

void bm_path_counts(benchmark::State& state) {
  Algebra g = Algebra::make(Kind::GL, 2, 2);
  std::vector<Weight> seeds;
  for (long long s = -2; s <= 2; ++s)
    for (long long i = 0; i <= 4; ++i) seeds.push_back(gl22_block(s, i));
  MarkedGraph graph = build_block_graph(g, seeds, 4);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_increasing(graph));
}
BENCHMARK(bm_path_counts);

void bm_weight_expand(benchmark::State& state) {
  Algebra g = Algebra::make(Kind::OspOdd, 3, 3);
  Weight lam = module_weight_of(g, parse_diagram(g, "(-)x^2ox"));
  G0Char c = euler_char(g, lam);
  for (auto _ : state) benchmark::DoNotOptimize(weight_expand(c, -1));
}
BENCHMARK(bm_weight_expand);

void bm_restriction_oracle(benchmark::State& state) {
  Algebra g = Algebra::make(Kind::GL, 2, 2);
  ZSum f = weight_expand(euler_char(g, gl22_block(0, 2)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(ds_restrict_oracle(g, f, 1));
}
BENCHMARK(bm_restriction_oracle);

}  // namespace

BENCHMARK_MAIN();
