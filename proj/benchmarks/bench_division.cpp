#include <benchmark/benchmark.h>

#include <random>

#include "polydiv/polydiv.hpp"

using namespace polydiv;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t degree) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) {
        v = coeff(rng);
    }
    if (c.back().is_zero()) {
        c.back() = 1;
    }
    return Polynomial(std::move(c));
}

// range(0) = deg f, divisor degree is deg f / 2.
template <Method M>
void BM_Divide(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Polynomial f = random_poly(rng, n);
    const Polynomial g = random_poly(rng, std::max<std::size_t>(1, n / 2));
    const MatrixLimits limits{256};
    for (auto _ : state) {
        benchmark::DoNotOptimize(divide(f, g, M, limits));
    }
}

void BM_DetBareiss(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-9, 9);
    const auto order = static_cast<std::size_t>(state.range(0));
    ExactMatrix m(order);
    for (std::size_t r = 0; r < order; ++r) {
        for (std::size_t c = 0; c < order; ++c) {
            m(r, c) = coeff(rng);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_bareiss(m));
    }
}

} // namespace

BENCHMARK(BM_Divide<Method::longdiv>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Divide<Method::closed>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Divide<Method::det_formula>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Divide<Method::det_ratio>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_DetBareiss)->RangeMultiplier(2)->Range(2, 32);

BENCHMARK_MAIN();
