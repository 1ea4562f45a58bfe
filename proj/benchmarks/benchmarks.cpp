#include <benchmark/benchmark.h>

#include "nhtop/alexander.hpp"
#include "nhtop/collapse.hpp"
#include "nhtop/complex.hpp"
#include "nhtop/generators.hpp"
#include "nhtop/harness.hpp"
#include "nhtop/homology.hpp"
#include "nhtop/recognition.hpp"

using namespace nhtop;

namespace {

void bm_dual(benchmark::State& state) {
  SimplicialComplex rp2 = reference("rp2_6").complex;
  std::vector<Vertex> ground = rp2.vertex_set();
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    ground = merge_vertex_sets(ground, {Vertex{"g" + std::to_string(i)}});
  GroundSet g(ground);
  for (auto _ : state) benchmark::DoNotOptimize(dual_over(rp2, g));
}
BENCHMARK(bm_dual)->Arg(0)->Arg(2)->Arg(4)->Name("dual/rp2_over_6_to_10_vertices");

void bm_relative_dual(benchmark::State& state) {
  SimplicialComplex s = standard(StandardKind::BoundarySphere, static_cast<int>(state.range(0)));
  Simplex tau(fresh_vertices(s.vertex_set(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(relative_dual(s, tau));
}
BENCHMARK(bm_relative_dual)->Arg(2)->Arg(3)->Arg(4)->Name("relative_dual/boundary_sphere");

void bm_betti(benchmark::State& state) {
  SimplicialComplex k = reference("rp2_6").complex;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    k = barycentric_subdivision(k);
  for (auto _ : state) benchmark::DoNotOptimize(betti(k));
}
BENCHMARK(bm_betti)->Arg(0)->Arg(1)->Name("betti/rp2_subdivided");

void bm_collapse(benchmark::State& state) {
  SimplicialComplex ball = shelled_ball(3, static_cast<int>(state.range(0)), 7).complex;
  for (auto _ : state) benchmark::DoNotOptimize(is_collapsible(ball));
}
BENCHMARK(bm_collapse)->Arg(6)->Arg(10)->Arg(14)->Name("is_collapsible/shelled_3_ball");

void bm_classify(benchmark::State& state) {
  SimplicialComplex s =
      nh_double_dual(SampleKind::Sphere, static_cast<int>(state.range(0)), 0, 0, 5).complex;
  for (auto _ : state) benchmark::DoNotOptimize(classify_nh(s));
}
BENCHMARK(bm_classify)->Arg(1)->Arg(2)->Name("classify_nh/double_dual_sphere");

void bm_enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_small(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_enumerate)->Arg(4)->Arg(5)->Name("enumerate_small/vertex_cap");

}  // namespace

BENCHMARK_MAIN();
