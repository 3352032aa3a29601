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

#include <chrono>
#include <random>

#include "pgpart/attractor.hpp"
#include "pgpart/oracle.hpp"
#include "test_util.hpp"

namespace pgpart {
namespace {

using testing::set_of;

class G1Attractor : public ::testing::Test
{
protected:
    Game game = testing::load_fixture("G1.gm");
    Subgame g{game.arena};
};

TEST_F(G1Attractor, Cpre)
{
    EXPECT_EQ(cpre(g, Player::P0, set_of(3, {2})), set_of(3, {2}));
    EXPECT_EQ(cpre(g, Player::P1, set_of(3, {0})), set_of(3, {1}));
    EXPECT_TRUE(cpre(g, Player::P0, VertexSet(3)).empty());
}

TEST_F(G1Attractor, Attractor)
{
    EXPECT_EQ(attractor(g, Player::P1, set_of(3, {0})), set_of(3, {0, 1}));
    EXPECT_EQ(attractor(g, Player::P0, set_of(3, {2})), set_of(3, {2}));
    EXPECT_EQ(attractor(g, Player::P0, g.alive()), g.alive());
}

TEST_F(G1Attractor, PositiveAttractor)
{
    EXPECT_EQ(positive_attractor(g, Player::P0, set_of(3, {2})), set_of(3, {2}));
    EXPECT_EQ(positive_attractor(g, Player::P0, set_of(3, {1})), set_of(3, {0}));
    const Game g2 = testing::load_fixture("G2.gm");
    EXPECT_EQ(positive_attractor(Subgame(g2.arena), Player::P0, set_of(1, {0})), set_of(1, {0}));
}

TEST_F(G1Attractor, PositiveSafeAttractor)
{
    EXPECT_EQ(positive_safe_attractor(g, Player::P0, set_of(3, {0, 2}), set_of(3, {1})), set_of(3, {2}));
    EXPECT_TRUE(positive_safe_attractor(g, Player::P0, set_of(3, {1}), set_of(3, {1})).empty());
}

struct Triple
{
    Game game;
    VertexSet u;
    Player i;
};

Triple
random_triple(std::uint64_t seed)
{
    Game game = random_game({1 + seed % 10, 1 + seed % 3, {3}, seed});
    std::mt19937_64 rng(seed);
    VertexSet u(game.arena.vertex_count());
    for (VertexId v = 0; v < game.arena.vertex_count(); ++v) {
        if (rng() % 3 == 0) u.insert(v);
    }
    return {std::move(game), std::move(u), player(static_cast<int>(rng() % 2))};
}

TEST(AttractorLaws, RandomTriples)
{
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const Triple t = random_triple(s);
        const Subgame g(t.game.arena);
        const VertexSet a = attractor(g, t.i, t.u);
        EXPECT_EQ(a, t.u | positive_attractor(g, t.i, t.u)) << "seed " << s;
        EXPECT_TRUE(is_trap(g, g.alive() - a, t.i)) << "seed " << s;

        VertexSet bigger = t.u;
        bigger.insert(static_cast<VertexId>(s % t.game.arena.vertex_count()));
        EXPECT_TRUE(a.is_subset_of(attractor(g, t.i, bigger)));
        EXPECT_TRUE(positive_attractor(g, t.i, t.u).is_subset_of(positive_attractor(g, t.i, bigger)));

        const VertexSet avoid = g.select([&](VertexId v) { return (v + s) % 4 == 0; });
        const VertexSet safe = positive_safe_attractor(g, t.i, t.u, avoid);
        EXPECT_FALSE(safe.intersects(avoid));
        EXPECT_TRUE(safe.is_subset_of(positive_attractor(g.without(avoid), t.i, t.u - avoid)));
        EXPECT_EQ(positive_safe_attractor(g, t.i, t.u, VertexSet(g.universe())), positive_attractor(g, t.i, t.u));
    }
}

// Fixpoint iteration straight from the definition, for cross-checking.
VertexSet
naive_attractor(const Subgame& g, Player i, const VertexSet& u)
{
    VertexSet x = u;
    for (;;) {
        VertexSet next = x | cpre(g, i, x);
        if (next == x) return x;
        x = std::move(next);
    }
}

TEST(AttractorLaws, MatchesNaiveFixpoint)
{
    for (std::uint64_t s = 0; s < 500; ++s) {
        const Triple t = random_triple(s);
        const Subgame g(t.game.arena);
        EXPECT_EQ(attractor(g, t.i, t.u), naive_attractor(g, t.i, t.u));
    }
}

TEST(AttractorLaws, WorkIsLinearInEdges)
{
    for (std::size_t n : {1000u, 10000u, 100000u}) {
        const Game game = random_game({n, 7, {5}, n});
        const Subgame g(game.arena);
        const VertexSet u = g.select([](VertexId v) { return v % 97 == 0; });
        AttractorStats stats;
        attractor(g, Player::P0, u, &stats);
        EXPECT_LE(stats.edges_scanned, 2 * game.arena.edge_count() + n);
    }
}

TEST(AttractorLaws, LargeGameUnderOneSecond)
{
    const Game game = random_game({100000, 7, {5}, 7});
    const Subgame g(game.arena);
    const VertexSet u = g.select([](VertexId v) { return v % 50 == 0; });
    const auto start = std::chrono::steady_clock::now();
    attractor(g, Player::P1, u);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_LT(elapsed, std::chrono::seconds(1));
}

} // namespace
} // namespace pgpart
