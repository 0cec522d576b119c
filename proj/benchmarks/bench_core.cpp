#include <benchmark/benchmark.h>

#include "ramlab/arith/parse.hpp"
#include "ramlab/globalorder/order.hpp"
#include "ramlab/identity/identity.hpp"
#include "ramlab/localfield/local_poly.hpp"
#include "ramlab/schmidt/schmidt.hpp"

using namespace ramlab;

namespace {

Poly<IntegerRing> zpoly(const char* s) { return to_integer_poly(parse_text_poly(s)); }

void BM_Round2(benchmark::State& state) {
    const auto eo = equation_order(zpoly("x^3-x^2-2x-8"));
    const Integer p = 2;
    for (auto _ : state) benchmark::DoNotOptimize(round2_pmaximal(eo, p));
}
BENCHMARK(BM_Round2);

void BM_CheckIdentityZ(benchmark::State& state) {
    const auto f = zpoly("x^4+4x^2+2");
    const Integer p = 2;
    for (auto _ : state) benchmark::DoNotOptimize(check_identity(f, p, state.range(0)));
}
BENCHMARK(BM_CheckIdentityZ)->Arg(64)->Arg(256);

void BM_CheckIdentityFqT(benchmark::State& state) {
    const auto k = FiniteField::get(3);
    const auto f = to_fq_t_poly(parse_text_poly("x^3-t"), k);
    const GfPoly pi = to_fq_poly_in_t(parse_text_poly("t"), k);
    for (auto _ : state) benchmark::DoNotOptimize(check_identity(f, pi, 64));
}
BENCHMARK(BM_CheckIdentityFqT);

void BM_HenselLift(benchmark::State& state) {
    const auto q5 = CompletionContext::p_adic(5, state.range(0));
    const auto f = embed(zpoly("x^2+1"), q5);
    const auto k = q5.residue_field();
    const GfPoly g0(k, {k.from_int(3), k.one()});
    const GfPoly h0(k, {k.from_int(2), k.one()});
    for (auto _ : state) benchmark::DoNotOptimize(hensel_lift(f, g0, h0, state.range(0)));
}
BENCHMARK(BM_HenselLift)->Arg(16)->Arg(128)->Arg(512);

void BM_RadicalDegree(benchmark::State& state) {
    const auto ctx = CompletionContext::laurent(5, state.range(0));
    const auto f = embed(to_fq_t_poly(parse_text_poly("x^5-t"), FiniteField::get(5)), ctx);
    for (auto _ : state) benchmark::DoNotOptimize(radical_degree(f));
}
BENCHMARK(BM_RadicalDegree)->Arg(64)->Arg(256);

void BM_Schmidt(benchmark::State& state) {
    for (auto _ : state) {
        const auto model = build_model(3, state.range(0));
        benchmark::DoNotOptimize(strict_inequality_report(model));
    }
}
BENCHMARK(BM_Schmidt)->Arg(18)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
