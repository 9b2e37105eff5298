// Microbenchmarks for the hot paths: Galois closure, quantale construction,
// the representation pipeline, the game solver, and the axiom schema.
#include <benchmark/benchmark.h>

#include "finrep/algebra.hpp"
#include "finrep/completion.hpp"
#include "finrep/formula.hpp"
#include "finrep/games.hpp"
#include "finrep/io.hpp"
#include "finrep/relational.hpp"

using namespace finrep;

namespace {

// diamond lattice 0 < 1,2 < 3 with composition = meet (residuated; the
// residuals are the Heyting implications)
ResiduatedSemigroup diamond_rs() {
    BoolMatrix leq(4);
    leq[0] = ElementSet::first_n(4);
    leq[1].add(1);
    leq[1].add(3);
    leq[2].add(2);
    leq[2].add(3);
    leq[3].add(3);
    FinitePoset poset(leq, 4);
    Table meet = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
    ResidualTables rt = derive_residuals(meet, poset);
    return ResiduatedSemigroup{std::move(poset), meet, rt.lres, rt.rres};
}

// three-element cyclic group with an absorbing top: the in-tree fixture with
// universal wins at depth 4
JoinSemilatticeSemigroup z3_top() {
    Table comp = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    Table join = {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}};
    return JoinSemilatticeSemigroup{4, comp, join};
}

AlgebraFile z3_file() {
    AlgebraFile a;
    a.kind = AlgebraFile::Kind::Jsl;
    a.elements = {"t", "e", "a", "b"};
    a.jsl = z3_top();
    return a;
}

void BM_GaloisClosureAllSubsets(benchmark::State& state) {
    auto rs = diamond_rs();
    for (auto _ : state)
        for (std::uint64_t bits = 0; bits < 16; ++bits) {
            ElementSet s{bits};
            benchmark::DoNotOptimize(galois_closure(s, rs.poset));
        }
}
BENCHMARK(BM_GaloisClosureAllSubsets);

void BM_BuildQuantale(benchmark::State& state) {
    auto rs = diamond_rs();
    for (auto _ : state) benchmark::DoNotOptimize(build_quantale(rs));
}
BENCHMARK(BM_BuildQuantale);

void BM_Represent(benchmark::State& state) {
    auto rs = diamond_rs();
    for (auto _ : state) benchmark::DoNotOptimize(represent(rs));
}
BENCHMARK(BM_Represent);

void BM_VerifyRepresentation(benchmark::State& state) {
    auto rs = diamond_rs();
    Representation rep = represent(rs);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_representation(rs, rep));
}
BENCHMARK(BM_VerifyRepresentation);

void BM_SolveGameAll(benchmark::State& state) {
    auto alg = z3_top();
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_game_all(alg, depth));
}
BENCHMARK(BM_SolveGameAll)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CertificateReplay(benchmark::State& state) {
    auto alg = z3_top();
    auto verdict = solve_game(alg, 4, GoalPair{0, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            verify_certificate(alg, GoalPair{0, 1}, *verdict.certificate, 4));
}
BENCHMARK(BM_CertificateReplay);

void BM_EmitAxiom(benchmark::State& state) {
    int rounds = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(emit_rho(rounds));
}
BENCHMARK(BM_EmitAxiom)->Arg(2)->Arg(3);

void BM_EvalAxiomRound2(benchmark::State& state) {
    auto alg = z3_top();
    FormulaPtr rho = emit_rho(2);
    for (auto _ : state) benchmark::DoNotOptimize(eval_formula(rho, alg));
}
BENCHMARK(BM_EvalAxiomRound2);

void BM_AlgebraRoundTrip(benchmark::State& state) {
    std::string text = serialize_algebra(z3_file());
    for (auto _ : state)
        benchmark::DoNotOptimize(serialize_algebra(parse_algebra(text)));
}
BENCHMARK(BM_AlgebraRoundTrip);

} // namespace

BENCHMARK_MAIN();
