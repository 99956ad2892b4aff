// Microbenchmarks for the hot paths: exact determinants, restricted minor
// enumeration, and the torsion pipeline.

#include <benchmark/benchmark.h>

#include "pentachain/invariants.hpp"

using namespace pentachain;

namespace {

ExactMatrix random_square(std::size_t n, std::uint64_t seed) {
    Sampler rng(seed);
    return rng.matrix(n, n, 9);
}

void BM_det(benchmark::State& state) {
    const auto m = random_square(static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(m.det());
}
BENCHMARK(BM_det)->Arg(4)->Arg(8)->Arg(12);

void BM_rank(benchmark::State& state) {
    Sampler rng(19);
    const auto m = rng.matrix(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(2 * state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16);

void BM_matrix_weight_n2(benchmark::State& state) {
    const auto tri = Triangulation::single_tetrahedron();
    Sampler rng(23);
    const auto zeta = random_coordinates(tri, 2, rng, 9);
    const GeneratorTable table = GeneratorTable::for_complex(tri, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix_weight(table, zeta, tri.tetras()[0]));
}
BENCHMARK(BM_matrix_weight_n2)->Unit(benchmark::kMillisecond);

void BM_pentagon_scalar(benchmark::State& state) {
    const auto rhs =
        Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}}).pachner_23(1, 2);
    Sampler rng(29);
    const auto zeta = random_coordinates(rhs, 1, rng, 50);
    for (auto _ : state) benchmark::DoNotOptimize(verify_pentagon_scalar(zeta));
}
BENCHMARK(BM_pentagon_scalar)->Unit(benchmark::kMillisecond);

void BM_pentagon_matrix(benchmark::State& state) {
    const auto rhs =
        Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}}).pachner_23(1, 2);
    Sampler rng(31);
    const auto zeta = random_coordinates(rhs, static_cast<std::size_t>(state.range(0)), rng, 9);
    for (auto _ : state) benchmark::DoNotOptimize(verify_pentagon_matrix(zeta));
}
BENCHMARK(BM_pentagon_matrix)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_invariant_table_ball(benchmark::State& state) {
    const auto ball = Triangulation::single_tetrahedron().pachner_14(1, 5);
    Sampler rng(37);
    const auto zeta = random_coordinates(ball, 1, rng, 9);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_table(ball, zeta));
}
BENCHMARK(BM_invariant_table_ball)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
