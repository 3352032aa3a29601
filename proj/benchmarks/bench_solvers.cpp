/*
 * Copyright 2026 The pgpart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "pgpart/attractor.hpp"
#include "pgpart/oracle.hpp"
#include "pgpart/psolve_buchi.hpp"
#include "pgpart/psolve_goodep.hpp"
#include "pgpart/psolve_layered.hpp"
#include "pgpart/recursive.hpp"

namespace pgpart {
namespace {

Game
bench_game(std::size_t n, Priority d, std::size_t outdeg = 3)
{
    return random_game({n, outdeg, {d}, n * 31 + d});
}

void
BM_Attractor(benchmark::State& state)
{
    const Game game = bench_game(static_cast<std::size_t>(state.range(0)), 6, 7);
    const Subgame g(game.arena);
    const VertexSet u = g.select([](VertexId v) { return v % 50 == 0; });
    for (auto _ : state) benchmark::DoNotOptimize(attractor(g, Player::P0, u));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * game.arena.edge_count()));
}
BENCHMARK(BM_Attractor)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

template <class Fn>
void
run_solver(benchmark::State& state, Fn fn)
{
    const Game game = bench_game(static_cast<std::size_t>(state.range(0)), static_cast<Priority>(state.range(1)));
    const Subgame g(game.arena);
    for (auto _ : state) benchmark::DoNotOptimize(fn(g, game.profile));
}

void
BM_Zielonka(benchmark::State& state)
{
    run_solver(state, [](const Subgame& g, const PriorityProfile& p) { return zielonka(g, p); });
}

void
BM_BuchiSolver(benchmark::State& state)
{
    run_solver(state, [](const Subgame& g, const PriorityProfile& p) { return buchi_solver(g, p); });
}

void
BM_GoodEpSolver(benchmark::State& state)
{
    run_solver(state, [](const Subgame& g, const PriorityProfile& p) { return good_ep_solver(g, p); });
}

void
BM_GoodEpSolverAntichain(benchmark::State& state)
{
    run_solver(state,
               [](const Subgame& g, const PriorityProfile& p) { return good_ep_solver(g, p, GoodEpMode::Antichain); });
}

void
BM_LaySolver(benchmark::State& state)
{
    run_solver(state, [](const Subgame& g, const PriorityProfile& p) { return lay_solver(g, p); });
}

void
solver_args(benchmark::internal::Benchmark* b)
{
    for (int n : {1000, 10000, 100000}) b->Args({n, 6});
    b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_Zielonka)->Apply(solver_args);
BENCHMARK(BM_BuchiSolver)->Apply(solver_args);
BENCHMARK(BM_GoodEpSolver)->Apply(solver_args);
// the antichain fixpoint is far slower than the explicit one at k = 1
BENCHMARK(BM_GoodEpSolverAntichain)->Args({1000, 6})->Args({10000, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaySolver)->Apply(solver_args);

void
BM_GenZielonka(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Game game = random_game({n, 3, {4, 4, 4}, n});
    const Subgame g(game.arena);
    for (auto _ : state) benchmark::DoNotOptimize(gen_zielonka(g, game.profile));
}
BENCHMARK(BM_GenZielonka)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
} // namespace pgpart

BENCHMARK_MAIN();
