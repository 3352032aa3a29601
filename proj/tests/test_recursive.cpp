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

#include <gtest/gtest.h>

#include <stop_token>

#include "pgpart/attractor.hpp"
#include "pgpart/oracle.hpp"
#include "pgpart/psolve_buchi.hpp"
#include "pgpart/psolve_goodep.hpp"
#include "pgpart/psolve_layered.hpp"
#include "pgpart/recursive.hpp"
#include "test_util.hpp"

namespace pgpart {
namespace {

using testing::set_of;

SolveOptions
audited()
{
    SolveOptions o;
    o.audit = true;
    return o;
}

PartialSolver
wrap(std::string name, SolveResult (*fn)(const Subgame&, const PriorityProfile&, const SolveOptions&))
{
    return {std::move(name), fn};
}

TEST(Zielonka, Examples)
{
    const Game g1 = testing::load_fixture("G1.gm");
    SolveResult r = zielonka(Subgame(g1.arena), g1.profile);
    EXPECT_EQ(r.win0, set_of(3, {0, 1, 2}));
    EXPECT_TRUE(r.win1.empty());
    EXPECT_TRUE(r.complete());

    const Game g2 = testing::load_fixture("G2.gm");
    r = zielonka(Subgame(g2.arena), g2.profile);
    EXPECT_TRUE(r.win0.empty());
    EXPECT_EQ(r.win1, set_of(1, {0}));
}

TEST(Zielonka, EmptySubgame)
{
    const Game g1 = testing::load_fixture("G1.gm");
    const Subgame empty = Subgame(g1.arena).without(VertexSet::full(3));
    EXPECT_EQ(zielonka(empty, g1.profile), SolveResult::none(empty));
    EXPECT_EQ(gen_zielonka(empty, g1.profile), SolveResult::none(empty));
}

TEST(Zielonka, WithBuchiOnG1)
{
    const Game g1 = testing::load_fixture("G1.gm");
    const Subgame g(g1.arena);
    EXPECT_EQ(ziel_with_psolver(g, g1.profile, wrap("buchi", buchi_solver), audited()), zielonka(g, g1.profile));
}

TEST(Zielonka, MatchesOracle)
{
    for (std::uint64_t i = 0; i < 400; ++i) {
        const Game game = testing::parity_game(i);
        const Subgame g(game.arena);
        const SolveResult truth = brute_parity(g, game.profile);
        const SolveResult r = zielonka(g, game.profile, audited());
        EXPECT_EQ(r, truth) << "game " << i;
        EXPECT_FALSE(r.win0.intersects(r.win1));
        EXPECT_EQ(r.win0 | r.win1, g.alive());
        EXPECT_EQ(ziel_with_psolver(g, game.profile, trivial_partial_solver(), audited()), truth) << "game " << i;
    }
}

TEST(Zielonka, WorksOnSubgames)
{
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Game game = testing::parity_game(i);
        const Subgame full(game.arena);
        // a 0-trap complement is a subgame
        const VertexSet x = full.select([&](VertexId v) { return v % 3 == 0; });
        const Subgame g = full.without(attractor(full, Player::P0, x));
        EXPECT_EQ(zielonka(g, game.profile), brute_parity(g, game.profile)) << "game " << i;
    }
}

TEST(Zielonka, FullySolvedByPartialSolverSkipsRecursion)
{
    const Game g1 = testing::load_fixture("G1.gm");
    const Subgame g(g1.arena);
    int calls = 0;
    PartialSolver ps{"complete", [&](const Subgame& s, const PriorityProfile& p, const SolveOptions& o) {
                         ++calls;
                         return zielonka(s, p, o);
                     }};
    EXPECT_EQ(ziel_with_psolver(g, g1.profile, ps, audited()), zielonka(g, g1.profile));
    EXPECT_EQ(calls, 1);
    calls = 0;
    EXPECT_EQ(gen_ziel_with_psolver(g, g1.profile, ps, audited()), zielonka(g, g1.profile));
    EXPECT_EQ(calls, 1);
}

TEST(Zielonka, DeepRecursionUsesNoNativeStack)
{
    // a descending chain v -> v - 1 ending in a priority-0 loop: one
    // activation per priority, all won by player 0
    const std::size_t n = 20000;
    std::vector<Player> owners(n);
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<Priority> prio(n);
    for (VertexId v = 0; v < n; ++v) {
        owners[v] = player(static_cast<int>(v % 2));
        prio[v] = v;
        succ[v] = {v == 0 ? 0 : v - 1};
    }
    const GameArena arena(std::move(owners), succ);
    const PriorityProfile profile = PriorityProfile::single(prio);
    const SolveResult r = zielonka(Subgame(arena), profile);
    EXPECT_EQ(r.win0, VertexSet::full(n));
    EXPECT_EQ(gen_zielonka(Subgame(arena), profile), r);
}

TEST(Zielonka, Cancellation)
{
    const Game game = random_game({2000, 3, {8}, 5});
    std::stop_source src;
    src.request_stop();
    SolveOptions o;
    o.stop = src.get_token();
    EXPECT_THROW(zielonka(Subgame(game.arena), game.profile, o), Cancelled);
    EXPECT_THROW(gen_zielonka(Subgame(game.arena), game.profile, o), Cancelled);
}

TEST(Zielonka, AuditRejectsBrokenPartialSolver)
{
    const Game g1 = testing::load_fixture("G1.gm");
    const Subgame g(g1.arena);
    // vertex 1 (player 1) may leave the unsolved part into its own region
    PartialSolver bad{"broken", [](const Subgame& s, const PriorityProfile&, const SolveOptions&) {
                          SolveResult r = SolveResult::none(s);
                          if (s.contains(2) && s.contains(1)) {
                              r.win1.insert(2);
                              r.unsolved.erase(2);
                          }
                          return r;
                      }};
    EXPECT_THROW(ziel_with_psolver(g, g1.profile, bad, audited()), ContractViolation);
    EXPECT_THROW(gen_ziel_with_psolver(g, g1.profile, bad, audited()), ContractViolation);
}

TEST(GenZielonka, Examples)
{
    const Game gg1 = testing::load_fixture("GG1.gpg");
    SolveResult r = gen_zielonka(Subgame(gg1.arena), gg1.profile);
    EXPECT_EQ(r.win0, set_of(2, {0, 1}));
    EXPECT_TRUE(r.win1.empty());

    const Game gg2 = testing::load_fixture("GG2.gpg");
    r = gen_zielonka(Subgame(gg2.arena), gg2.profile);
    EXPECT_EQ(r.win1, set_of(1, {0}));

    r = gen_ziel_with_psolver(Subgame(gg1.arena), gg1.profile, wrap("gen-buchi", gen_buchi_solver), audited());
    EXPECT_EQ(r.win0, set_of(2, {0, 1}));
}

TEST(GenZielonka, CollapsesToZielonka)
{
    for (std::uint64_t i = 0; i < 300; ++i) {
        const Game game = testing::parity_game(i);
        const Subgame g(game.arena);
        EXPECT_EQ(gen_zielonka(g, game.profile, audited()), zielonka(g, game.profile)) << "game " << i;
    }
}

TEST(GenZielonka, MatchesOracle)
{
    for (std::uint64_t i = 0; i < 300; ++i) {
        const Game game = testing::generalized_game(i);
        const Subgame g(game.arena);
        const SolveResult truth = brute_generalized(g, game.profile);
        EXPECT_EQ(gen_zielonka(g, game.profile, audited()), truth) << "game " << i;
        EXPECT_EQ(gen_ziel_with_psolver(g, game.profile, trivial_partial_solver(), audited()), truth);
    }
}

TEST(GenZielonka, CombinationsMatchOracle)
{
    const std::vector<PartialSolver> solvers = {
        wrap("gen-buchi", gen_buchi_solver),
        {"gen-goodep",
         [](const Subgame& g, const PriorityProfile& p, const SolveOptions& o) {
             return gen_good_ep_solver(g, p, GoodEpMode::Explicit, o);
         }},
        wrap("gen-lay", gen_lay_solver),
    };
    for (std::uint64_t i = 0; i < 150; ++i) {
        const Game game = testing::generalized_game(i);
        const Subgame g(game.arena);
        const SolveResult truth = brute_generalized(g, game.profile);
        for (const auto& ps : solvers)
            EXPECT_EQ(gen_ziel_with_psolver(g, game.profile, ps, audited()), truth) << ps.name << " game " << i;
    }
}

} // namespace
} // namespace pgpart
