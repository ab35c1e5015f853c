#include "gsp4spin/lfactors.hpp"
#include "gsp4spin/notation.hpp"
#include "gsp4spin/verify.hpp"

#include <benchmark/benchmark.h>

using namespace gsp4;

namespace {

ContextPtr bench_ctx() {
    static const ContextPtr ctx = [] {
        Context::Builder b;
        b.extension(ExtensionKind::Unramified, "K");
        for (const char* n : {"sigma", "chi", "chi_1", "chi_2", "mu"}) b.declare_unramified(n);
        b.declare_order2_unramified("xi");
        b.declare_ramified("rho_r");
        return b.freeze();
    }();
    return ctx;
}

void BM_character_product(benchmark::State& state) {
    const ContextPtr ctx = bench_ctx();
    const Character a = Character::generator(ctx, "sigma") *
                        Character::nu(ctx, Rational::half()) * Character::chi_ext(ctx);
    const Character b = Character::generator(ctx, "chi").pow(-2) *
                        Character::generator(ctx, "xi");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_character_product);

void BM_full_factor_lookup(benchmark::State& state) {
    const ContextPtr ctx = bench_ctx();
    const GSp4Rep rep = GSp4Rep::make_Vd(Character::generator(ctx, "xi"),
                                         Character::generator(ctx, "sigma"));
    const Character mu = Character::generator(ctx, "mu");
    for (auto _ : state) benchmark::DoNotOptimize(l_full_any_model(rep, mu));
}
BENCHMARK(BM_full_factor_lookup);

void BM_anisotropic_triple(benchmark::State& state) {
    const ContextPtr ctx = bench_ctx();
    const GSp4Rep rep = GSp4Rep::make_IIb(Character::generator(ctx, "chi"),
                                          Character::generator(ctx, "sigma"));
    const BesselDatum bd{CharacterK::norm_pullback(Character::generator(ctx, "chi") *
                                                   Character::generator(ctx, "sigma"))};
    const Character one = Character::one(ctx);
    for (auto _ : state) benchmark::DoNotOptimize(l_full_anisotropic(rep, bd, one));
}
BENCHMARK(BM_anisotropic_triple);

void BM_parse_rep(benchmark::State& state) {
    Workspace ws;
    ws.ctx = bench_ctx();
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_rep(ws, "L(nu^{1/2} xi St, nu^{-1/2} sigma)"));
}
BENCHMARK(BM_parse_rep);

void BM_verify_suite(benchmark::State& state) {
    for (auto _ : state) {
        verify::Options opt;
        opt.seed = 1;
        opt.instantiations = static_cast<int>(state.range(0));
        benchmark::DoNotOptimize(verify::run_all(opt));
    }
}
BENCHMARK(BM_verify_suite)->Arg(2)->Arg(8);

} // namespace

BENCHMARK_MAIN();
