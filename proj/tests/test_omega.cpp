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

#include <functional>
#include <random>

#include "pgpart/omega.hpp"
#include "pgpart/oracle.hpp"
#include "test_util.hpp"

namespace pgpart {
namespace {

using testing::set_of;

// The omega objectives are checked against the brute-force parity oracles by
// encoding them as parity conditions. Vertices in `absorbing` lose all their
// edges except a self-loop.
struct Encoded
{
    GameArena arena;
    PriorityProfile profile;
};

Encoded
encode(const GameArena& a, const VertexSet& absorbing,
       const std::function<std::vector<Priority>(VertexId)>& priorities)
{
    const std::size_t n = a.vertex_count();
    std::vector<Player> owners(n);
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<std::vector<Priority>> dims;
    for (VertexId v = 0; v < n; ++v) {
        owners[v] = a.owner(v);
        if (absorbing.contains(v)) succ[v] = {v};
        else succ[v].assign(a.successors(v).begin(), a.successors(v).end());
        const auto p = priorities(v);
        dims.resize(p.size(), std::vector<Priority>(n));
        for (std::size_t l = 0; l < p.size(); ++l) dims[l][v] = p[l];
    }
    return {GameArena(std::move(owners), succ), PriorityProfile(std::move(dims))};
}

VertexSet
oracle_win(const Encoded& e, Player i)
{
    const Subgame g(e.arena);
    const SolveResult r =
        e.profile.dimensions() == 1 ? brute_parity(g, e.profile) : brute_generalized(g, e.profile);
    return r.winning(i);
}

// Priorities good or bad for player i; a dominant bad priority beats both.
Priority
favours(Player i, bool good, bool dominant = false)
{
    if (i == Player::P0) return dominant ? 3 : good ? 2 : 1;
    return dominant ? 4 : good ? 3 : 2;
}

struct Case
{
    Game game;
    VertexSet target;
    VertexSet bad;
    Player i;
};

Case
random_case(std::uint64_t s)
{
    Game game = random_game({1 + s % 8, 3, {0}, 300000 + s});
    std::mt19937_64 rng(s);
    const std::size_t n = game.arena.vertex_count();
    VertexSet t(n), b(n);
    for (VertexId v = 0; v < n; ++v) {
        const auto r = rng() % 6;
        if (r < 2) t.insert(v);
        else if (r == 2) b.insert(v);
    }
    return {std::move(game), t, b, player(static_cast<int>(rng() % 2))};
}

TEST(Omega, G1Examples)
{
    const Game game = testing::load_fixture("G1.gm");
    const Subgame g(game.arena);
    EXPECT_EQ(win_reach(g, Player::P1, set_of(3, {0})), set_of(3, {0, 1}));
    EXPECT_TRUE(win_reach(g, Player::P0, VertexSet(3)).empty());
    EXPECT_EQ(win_reach(g, Player::P0, g.alive()), g.alive());

    EXPECT_EQ(win_safe(g, Player::P0, set_of(3, {1})), set_of(3, {2}));
    EXPECT_EQ(win_safe(g, Player::P0, VertexSet(3)), g.alive());
    EXPECT_TRUE(win_safe(g, Player::P1, g.alive()).empty());

    EXPECT_EQ(win_buchi(g, Player::P0, set_of(3, {2})), set_of(3, {2}));
    EXPECT_TRUE(win_buchi(g, Player::P0, set_of(3, {0})).empty());
    EXPECT_TRUE(win_buchi(g, Player::P1, VertexSet(3)).empty());

    EXPECT_EQ(win_buchi_safe(g, Player::P0, set_of(3, {2}), set_of(3, {1})), set_of(3, {2}));
    EXPECT_TRUE(win_buchi_safe(g, Player::P1, set_of(3, {1}), set_of(3, {0})).empty());
}

TEST(Omega, GeneralizedBuchiExamples)
{
    const Game game = testing::load_fixture("GG1.gpg");
    const Subgame g(game.arena);
    EXPECT_EQ(win_genbuchi_safe(g, {set_of(2, {1}), set_of(2, {0, 1})}, VertexSet(2)), set_of(2, {0, 1}));
    EXPECT_TRUE(win_genbuchi_safe(g, {set_of(2, {1}), VertexSet(2)}, VertexSet(2)).empty());
}

TEST(Omega, ReachAndSafeAgainstOracle)
{
    for (std::uint64_t s = 0; s < 400; ++s) {
        const Case c = random_case(s);
        const Subgame g(c.game.arena);
        const Player i = c.i;
        // reach: targets become winning sinks for i
        const Encoded reach = encode(c.game.arena, c.target, [&](VertexId v) {
            return std::vector<Priority>{c.target.contains(v) ? favours(i, true) : favours(i, false)};
        });
        EXPECT_EQ(win_reach(g, i, c.target), oracle_win(reach, i)) << "seed " << s;
        // safe: bad vertices become losing sinks
        const Encoded safe = encode(c.game.arena, c.bad, [&](VertexId v) {
            return std::vector<Priority>{c.bad.contains(v) ? favours(i, false) : favours(i, true)};
        });
        EXPECT_EQ(win_safe(g, i, c.bad), oracle_win(safe, i)) << "seed " << s;
    }
}

TEST(Omega, BuchiAgainstOracle)
{
    for (std::uint64_t s = 0; s < 400; ++s) {
        const Case c = random_case(s);
        const Subgame g(c.game.arena);
        const Player i = c.i;
        const Encoded buchi = encode(c.game.arena, VertexSet(g.universe()), [&](VertexId v) {
            return std::vector<Priority>{favours(i, c.target.contains(v))};
        });
        const VertexSet w = win_buchi(g, i, c.target);
        EXPECT_EQ(w, oracle_win(buchi, i)) << "seed " << s;
        EXPECT_TRUE(w.is_subset_of(win_reach(g, i, c.target)));

        // what the peeling loop discards is the opponent's co-Buchi region
        EXPECT_EQ(g.alive() - w, oracle_win(buchi, opponent(i))) << "seed " << s;

        const VertexSet t = c.target - c.bad;
        const Encoded both = encode(c.game.arena, c.bad, [&](VertexId v) {
            if (c.bad.contains(v)) return std::vector<Priority>{favours(i, false, true)};
            return std::vector<Priority>{favours(i, t.contains(v))};
        });
        const VertexSet ws = win_buchi_safe(g, i, t, c.bad);
        EXPECT_EQ(ws, oracle_win(both, i)) << "seed " << s;
        EXPECT_TRUE(ws.is_subset_of(win_buchi(g, i, t) & win_safe(g, i, c.bad)));
        EXPECT_EQ(win_buchi_safe(g, i, t, VertexSet(g.universe())), win_buchi(g, i, t));
    }
}

TEST(Omega, GeneralizedBuchiAgainstOracle)
{
    for (std::uint64_t s = 0; s < 300; ++s) {
        const Case c = random_case(s);
        const Subgame g(c.game.arena);
        const std::size_t n = g.universe();
        const std::size_t k = 1 + s % 3;
        std::mt19937_64 rng(s * 31 + 7);
        std::vector<VertexSet> targets(k, VertexSet(n));
        for (auto& t : targets) {
            for (VertexId v = 0; v < n; ++v) {
                if (!c.bad.contains(v) && rng() % 2) t.insert(v);
            }
        }
        const Encoded enc = encode(c.game.arena, c.bad, [&](VertexId v) {
            std::vector<Priority> p(k);
            for (std::size_t l = 0; l < k; ++l) p[l] = c.bad.contains(v) ? 3 : targets[l].contains(v) ? 2 : 1;
            return p;
        });
        const VertexSet w = win_genbuchi_safe(g, targets, c.bad);
        EXPECT_EQ(w, oracle_win(enc, Player::P0)) << "seed " << s;
        if (k == 1) EXPECT_EQ(w, win_buchi_safe(g, Player::P0, targets[0], c.bad));
    }
}

} // namespace
} // namespace pgpart
