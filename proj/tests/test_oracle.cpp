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

#include <algorithm>
#include <bit>
#include <random>

#include "pgpart/io.hpp"
#include "pgpart/oracle.hpp"
#include "test_util.hpp"

namespace pgpart {
namespace {

using testing::set_of;

TEST(Oracle, Examples)
{
    const Game g1 = testing::load_fixture("G1.gm");
    EXPECT_EQ(brute_parity(Subgame(g1.arena), g1.profile).win0, set_of(3, {0, 1, 2}));
    const Game g2 = testing::load_fixture("G2.gm");
    EXPECT_EQ(brute_parity(Subgame(g2.arena), g2.profile).win1, set_of(1, {0}));
    const Game gg1 = testing::load_fixture("GG1.gpg");
    EXPECT_EQ(brute_generalized(Subgame(gg1.arena), gg1.profile).win0, set_of(2, {0, 1}));
    const Game gg2 = testing::load_fixture("GG2.gpg");
    EXPECT_EQ(brute_generalized(Subgame(gg2.arena), gg2.profile).win1, set_of(1, {0}));
}

TEST(Oracle, Budgets)
{
    const Game big = random_game({11, 2, {3}, 1});
    EXPECT_THROW(brute_parity(Subgame(big.arena), big.profile), BudgetExceeded);
    const Game gbig = random_game({9, 2, {3, 3}, 1});
    EXPECT_THROW(brute_generalized(Subgame(gbig.arena), gbig.profile), BudgetExceeded);
    const Game dense = random_game({10, 10, {3}, 3});
    EXPECT_THROW(brute_parity(Subgame(dense.arena), dense.profile, 10), BudgetExceeded);
}

TEST(Oracle, PartitionAndAgreement)
{
    for (std::uint64_t i = 0; i < 300; ++i) {
        const Game game = testing::parity_game(i);
        const Subgame g(game.arena);
        const SolveResult p = brute_parity(g, game.profile);
        EXPECT_FALSE(p.win0.intersects(p.win1));
        EXPECT_EQ(p.win0 | p.win1, g.alive());
        EXPECT_TRUE(p.unsolved.empty());
        EXPECT_EQ(brute_generalized(g, game.profile), p) << "game " << i;
    }
}

// Rebuilds a game with every successor list permuted.
Game
shuffled(const Game& game, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::size_t n = game.arena.vertex_count();
    std::vector<Player> owners(n);
    std::vector<std::vector<VertexId>> succ(n);
    for (VertexId v = 0; v < n; ++v) {
        owners[v] = game.arena.owner(v);
        succ[v].assign(game.arena.successors(v).begin(), game.arena.successors(v).end());
        std::shuffle(succ[v].begin(), succ[v].end(), rng);
    }
    return {game.kind, GameArena(std::move(owners), succ), game.profile};
}

TEST(Oracle, InsensitiveToSuccessorOrder)
{
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Game game = testing::generalized_game(i);
        const Game other = shuffled(game, i);
        EXPECT_EQ(brute_generalized(Subgame(game.arena), game.profile),
                  brute_generalized(Subgame(other.arena), other.profile));
        const Game pg = testing::parity_game(i);
        const Game po = shuffled(pg, i);
        EXPECT_EQ(brute_parity(Subgame(pg.arena), pg.profile), brute_parity(Subgame(po.arena), po.profile));
    }
}

// Closed walks found by search over (vertex, visited set): a walk from s back
// to s that stays inside S and visits all of S.
bool
closed_walk_covers(const std::vector<unsigned>& adj, unsigned s_mask)
{
    const unsigned first = static_cast<unsigned>(std::countr_zero(s_mask));
    std::vector<char> seen(adj.size() << adj.size(), 0);
    std::vector<std::pair<unsigned, unsigned>> stack{{first, 1u << first}};
    while (!stack.empty()) {
        auto [v, visited] = stack.back();
        stack.pop_back();
        for (unsigned w = 0; w < adj.size(); ++w) {
            if (!((adj[v] >> w) & 1U) || !((s_mask >> w) & 1U)) continue;
            const unsigned nv = visited | (1u << w);
            if (w == first && nv == s_mask) return true;
            const std::size_t key = (std::size_t{w} << adj.size()) | nv;
            if (!seen[key]) {
                seen[key] = 1;
                stack.push_back({w, nv});
            }
        }
    }
    return false;
}

unsigned
reachable(const std::vector<unsigned>& adj, unsigned v)
{
    unsigned r = 1u << v, frontier = r;
    while (frontier) {
        unsigned next = 0;
        for (unsigned u = 0; u < adj.size(); ++u) {
            if ((frontier >> u) & 1U) next |= adj[u];
        }
        frontier = next & ~r;
        r |= next;
    }
    return r;
}

// In one-player games the owner wins from v iff some closed walk reachable
// from v has a winning set of maxima.
TEST(Oracle, OnePlayerGamesMatchLassoSemantics)
{
    std::mt19937_64 rng(11);
    for (unsigned n = 1; n <= 4; ++n) {
        const unsigned edges = n * n;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << edges); code += (n == 4 ? 7 : 1)) {
            std::vector<unsigned> adj(n, 0);
            std::vector<std::vector<VertexId>> succ(n);
            bool deadlock = false;
            for (unsigned v = 0; v < n; ++v) {
                adj[v] = static_cast<unsigned>((code >> (v * n)) & ((1u << n) - 1));
                for (unsigned w = 0; w < n; ++w) {
                    if ((adj[v] >> w) & 1U) succ[v].push_back(w);
                }
                deadlock |= adj[v] == 0;
            }
            if (deadlock) continue;

            const Player owner = player(static_cast<int>(code % 2));
            const std::size_t k = owner == Player::P0 ? 1 : 2;
            std::vector<std::vector<Priority>> dims(k, std::vector<Priority>(n));
            for (auto& dim : dims) {
                for (auto& p : dim) p = static_cast<Priority>(rng() % 4);
            }
            const GameArena arena(std::vector<Player>(n, owner), succ);
            const PriorityProfile profile(dims);
            const SolveResult r = owner == Player::P0 ? brute_parity(Subgame(arena), profile)
                                                      : brute_generalized(Subgame(arena), profile);

            auto good_for_owner = [&](unsigned s) {
                bool all_even = true;
                for (const auto& dim : dims) {
                    Priority m = 0;
                    for (unsigned v = 0; v < n; ++v) {
                        if ((s >> v) & 1U) m = std::max(m, dim[v]);
                    }
                    all_even &= is_even(m);
                }
                return owner == Player::P0 ? all_even : !all_even;
            };
            for (unsigned v = 0; v < n; ++v) {
                const unsigned reach = reachable(adj, v);
                bool wins = false;
                for (unsigned s = 1; s < (1u << n) && !wins; ++s) {
                    if ((s & reach) == s && good_for_owner(s) && closed_walk_covers(adj, s)) wins = true;
                }
                ASSERT_EQ(r.winning(owner).contains(v), wins) << "graph " << code << " vertex " << v;
            }
        }
    }
}

TEST(RandomGame, DeterministicAndValid)
{
    const RandomGameParams params{12, 4, {5, 3}, 77};
    EXPECT_EQ(serialize(random_game(params)), serialize(random_game(params)));
    EXPECT_NE(serialize(random_game(params)), serialize(random_game({12, 4, {5, 3}, 78})));

    const Game one = random_game({1, 1, {3}, 5});
    ASSERT_EQ(one.arena.vertex_count(), 1u);
    EXPECT_EQ(one.arena.successors(0).size(), 1u);
    EXPECT_EQ(one.arena.successors(0)[0], 0u);
    EXPECT_EQ(one.kind, GameKind::Parity);

    for (std::uint64_t s = 0; s < 200; ++s) {
        const Game g = random_game({1 + s % 20, 1 + s % 5, {4, 2}, s});
        EXPECT_EQ(g.kind, GameKind::Generalized);
        EXPECT_TRUE(Subgame(g.arena).is_deadlock_free());
        for (VertexId v = 0; v < g.arena.vertex_count(); ++v) {
            EXPECT_LE(g.arena.successors(v).size(), 1 + s % 5);
            EXPECT_LE(g.profile.priority(v, 0), 4u);
            EXPECT_LE(g.profile.priority(v, 1), 2u);
        }
        EXPECT_NO_THROW(parse_game(serialize(g)));
    }
}

} // namespace
} // namespace pgpart
