#include <benchmark/benchmark.h>

#include <holoext/certify.hpp>
#include <holoext/moment.hpp>

#include <random>

using namespace holoext;

namespace {

BPoly2 sample_poly(unsigned degree, std::uint64_t seed) {
    std::mt19937_64 g{seed};
    std::uniform_int_distribution<int> coeff(-5, 5);
    BPoly2 f;
    for (unsigned h = 0; h <= degree; ++h)
        for (unsigned k = 0; h + k <= degree; ++k)
            for (unsigned m = 0; h + k + 2 * m <= degree; ++m) {
                int c = coeff(g);
                if (c != 0) f.add_term({h, k, m, 0}, GaussRational(c));
            }
    return f;
}

void bm_monomial_moment(benchmark::State& state) {
    for (auto _ : state)
        for (unsigned h = 0; h <= 6; ++h)
            for (unsigned k = 0; k <= 6; ++k)
                benchmark::DoNotOptimize(monomial_moment(h, k, 2, 1));
}
BENCHMARK(bm_monomial_moment);

void bm_symbolic_pullback(benchmark::State& state) {
    BPoly2 f = sample_poly(static_cast<unsigned>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(disc_pullback_symbolic(f));
}
BENCHMARK(bm_symbolic_pullback)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void bm_moments_vanish(benchmark::State& state) {
    BPoly2 f = sample_poly(static_cast<unsigned>(state.range(0)), 43);
    for (auto _ : state) benchmark::DoNotOptimize(moments_vanish(f));
}
BENCHMARK(bm_moments_vanish)->Arg(4)->Arg(6);

void bm_certify(benchmark::State& state) {
    BPoly2 f = sample_poly(static_cast<unsigned>(state.range(0)), 44);
    for (auto _ : state) benchmark::DoNotOptimize(certify(f));
}
BENCHMARK(bm_certify)->Arg(4)->Arg(6);

void bm_normal_form(benchmark::State& state) {
    BPoly2 f;
    for (unsigned m = 0; m <= 6; ++m)
        for (unsigned p = 0; p <= 6; ++p) f.add_term({1, 0, m, p}, GaussRational(1));
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(f));
}
BENCHMARK(bm_normal_form);

}  // namespace

BENCHMARK_MAIN();
