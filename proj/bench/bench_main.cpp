#include <benchmark/benchmark.h>

#include <random>

#include "nilorb/centralizer.hpp"
#include "nilorb/modular.hpp"
#include "nilorb/orbits.hpp"

using namespace nilorb;

namespace {

// Random n x n matrix of rank about n - 8, built as a product of thin factors.
ModMatrix low_rank(std::size_t n, const PrimeField& f) {
    std::mt19937_64 rng(n);
    const std::size_t k = n - 8;
    ModMatrix a(n, k), b(k, n), m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = rng() % f.prime();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = rng() % f.prime();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(a(i, l), b(l, j)));
    return m;
}

const PrimeField& field() {
    static std::mt19937_64 rng(1);
    static const PrimeField f(random_prime(rng));
    return f;
}

void BM_RankMod(benchmark::State& state) {
    const ModMatrix m = low_rank(static_cast<std::size_t>(state.range(0)), field());
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod(m, field()));
}

void BM_RankModSerial(benchmark::State& state) {
    const ModMatrix m = low_rank(static_cast<std::size_t>(state.range(0)), field());
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod_serial(m, field()));
}

BENCHMARK(BM_RankMod)->Arg(248)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankModSerial)->Arg(248)->Arg(512)->Unit(benchmark::kMillisecond);

Kind kind_arg(const benchmark::State& state) { return all_kinds[static_cast<std::size_t>(state.range(0))]; }

void BM_Enumerate(benchmark::State& state) {
    const LieAlgebra& L = algebra_for(kind_arg(state));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(L, 7));
}

void BM_EnumerateSerial(benchmark::State& state) {
    const LieAlgebra& L = algebra_for(kind_arg(state));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams_serial(L, 7));
}

// F4 and E6
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
    const LieAlgebra& L = algebra_for(kind_arg(state));
    const auto orbits = enumerate_diagrams(L, 7);
    for (auto _ : state) benchmark::DoNotOptimize(certify_orbits(L, orbits, 3));
}

void BM_CertifySerial(benchmark::State& state) {
    const LieAlgebra& L = algebra_for(kind_arg(state));
    const auto orbits = enumerate_diagrams(L, 7);
    for (auto _ : state) benchmark::DoNotOptimize(certify_orbits_serial(L, orbits, 3));
}

BENCHMARK(BM_Certify)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifySerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DoubleCentralizer(benchmark::State& state) {
    const LieAlgebra& L = algebra_for(kind_arg(state));
    const auto orbits = enumerate_diagrams(L, 7);
    for (auto _ : state) benchmark::DoNotOptimize(double_centralizer_orbits(L, orbits, 3));
}

void BM_DoubleCentralizerSerial(benchmark::State& state) {
    const LieAlgebra& L = algebra_for(kind_arg(state));
    const auto orbits = enumerate_diagrams(L, 7);
    for (auto _ : state) benchmark::DoNotOptimize(double_centralizer_orbits_serial(L, orbits, 3));
}

BENCHMARK(BM_DoubleCentralizer)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DoubleCentralizerSerial)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
