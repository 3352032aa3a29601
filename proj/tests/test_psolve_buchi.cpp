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

#include "pgpart/oracle.hpp"
#include "pgpart/psolve_buchi.hpp"
#include "test_util.hpp"

namespace pgpart {
namespace {

using testing::set_of;

std::vector<std::string>
names(const std::vector<PriorityElement>& list)
{
    std::vector<std::string> out;
    for (const auto& e : list) out.push_back(to_string(e));
    return out;
}

TEST(ListL, Orderings)
{
    EXPECT_EQ(names(build_list_L(PriorityProfile::single({3}))),
              (std::vector<std::string>{"OddAt(3,1)", "OddAt(1,1)", "EvenVector(2)", "EvenVector(0)"}));
    EXPECT_EQ(names(build_list_L(PriorityProfile({{1}, {1}}))),
              (std::vector<std::string>{"OddAt(1,1)", "OddAt(1,2)", "EvenVector(0,0)"}));
    EXPECT_EQ(names(build_list_L(PriorityProfile::single({0}))), (std::vector<std::string>{"EvenVector(0)"}));
    EXPECT_EQ(names(build_list_L(PriorityProfile({{2}, {3}}))),
              (std::vector<std::string>{"OddAt(3,2)", "OddAt(1,1)", "OddAt(1,2)", "EvenVector(2,2)", "EvenVector(2,0)",
                                        "EvenVector(0,2)", "EvenVector(0,0)"}));
}

TEST(ListL, LazyListRestarts)
{
    ElementList list({4, 4});
    std::size_t count = 0;
    while (list.next()) ++count;
    EXPECT_EQ(count, 4u + 9u);
    list.reset();
    ASSERT_TRUE(list.next());
}

TEST(BuchiSolver, Examples)
{
    const Game g1 = testing::load_fixture("G1.gm");
    SolveResult r = buchi_solver(Subgame(g1.arena), g1.profile);
    EXPECT_EQ(r.win0, set_of(3, {0, 1, 2}));
    EXPECT_TRUE(r.win1.empty());

    const Game g2 = testing::load_fixture("G2.gm");
    r = buchi_solver(Subgame(g2.arena), g2.profile);
    EXPECT_EQ(r.win1, set_of(1, {0}));

    const Subgame empty = Subgame(g1.arena).without(VertexSet::full(3));
    EXPECT_EQ(buchi_solver(empty, g1.profile), SolveResult::none(empty));
}

TEST(BuchiSolver, GeneralizedExamples)
{
    const Game gg1 = testing::load_fixture("GG1.gpg");
    EXPECT_EQ(gen_buchi_solver(Subgame(gg1.arena), gg1.profile).win0, set_of(2, {0, 1}));
    const Game gg2 = testing::load_fixture("GG2.gpg");
    EXPECT_EQ(gen_buchi_solver(Subgame(gg2.arena), gg2.profile).win1, set_of(1, {0}));
}

TEST(BuchiSolver, SoundAgainstOracle)
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Game game = testing::parity_game(i);
        const Subgame g(game.arena);
        const SolveResult truth = brute_parity(g, game.profile);
        const SolveResult r = buchi_solver(g, game.profile);
        EXPECT_TRUE(r.win0.is_subset_of(truth.win0)) << "game " << i;
        EXPECT_TRUE(r.win1.is_subset_of(truth.win1)) << "game " << i;
        EXPECT_EQ(audit_partial_result(g, r), std::nullopt) << "game " << i;
        EXPECT_EQ(buchi_solver(g, game.profile), r);
    }
}

TEST(BuchiSolver, GeneralizedSoundAgainstOracle)
{
    for (std::uint64_t i = 0; i < 300; ++i) {
        const Game game = testing::generalized_game(i);
        const Subgame g(game.arena);
        const SolveResult truth = brute_generalized(g, game.profile);
        const SolveResult r = gen_buchi_solver(g, game.profile);
        EXPECT_TRUE(r.win0.is_subset_of(truth.win0)) << "game " << i;
        EXPECT_TRUE(r.win1.is_subset_of(truth.win1)) << "game " << i;
        EXPECT_EQ(audit_partial_result(g, r), std::nullopt) << "game " << i;
    }
}

TEST(BuchiSolver, CollapsesAtOneDimension)
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Game game = testing::parity_game(i);
        const Subgame g(game.arena);
        EXPECT_EQ(gen_buchi_solver(g, game.profile), buchi_solver(g, game.profile)) << "game " << i;
    }
}

} // namespace
} // namespace pgpart
