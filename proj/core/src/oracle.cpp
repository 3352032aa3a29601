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

#include "pgpart/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace pgpart {

namespace {

// Dense copy of the alive part, small enough for bitmask tricks.
struct Small
{
    std::vector<VertexId> ids;
    std::vector<Player> owner;
    std::vector<std::vector<int>> succ;
};

Small
compact(const Subgame& g)
{
    Small s;
    s.ids = g.alive().to_vector();
    std::vector<int> local(g.universe(), -1);
    for (std::size_t j = 0; j < s.ids.size(); ++j) local[s.ids[j]] = static_cast<int>(j);
    s.owner.resize(s.ids.size());
    s.succ.resize(s.ids.size());
    for (std::size_t j = 0; j < s.ids.size(); ++j) {
        s.owner[j] = g.owner(s.ids[j]);
        g.for_each_successor(s.ids[j], [&](VertexId w) { s.succ[j].push_back(local[w]); });
    }
    return s;
}

// Mixed-radix counter over the choices of the given player's vertices.
class StrategyCounter
{
public:
    StrategyCounter(const Small& s, Player who, std::size_t budget) : s_(s), choice_(s.ids.size(), 0)
    {
        double total = 1;
        for (std::size_t j = 0; j < s.ids.size(); ++j) {
            if (s.owner[j] == who) {
                mine_.push_back(j);
                total *= static_cast<double>(s.succ[j].size());
            }
        }
        if (total > static_cast<double>(budget))
            throw BudgetExceeded("oracle strategy space too large (" + std::to_string(total) + ")");
    }

    // Successors of j in the graph restricted by the current strategy.
    template <class F>
    void for_each_edge(std::size_t j, F&& f) const
    {
        if (std::find(mine_.begin(), mine_.end(), j) != mine_.end()) {
            f(s_.succ[j][choice_[j]]);
            return;
        }
        for (int w : s_.succ[j]) f(w);
    }

    bool advance()
    {
        for (std::size_t j : mine_) {
            if (++choice_[j] < s_.succ[j].size()) return true;
            choice_[j] = 0;
        }
        return false;
    }

private:
    const Small& s_;
    std::vector<std::size_t> choice_;
    std::vector<std::size_t> mine_;
};

using Mask = std::uint32_t;

// Bitmask of vertices reachable from j in one or more steps, restricted to `within`.
template <class Counter>
Mask
reach_from(const Counter& c, std::size_t n, std::size_t j, Mask within)
{
    Mask seen = 0;
    std::vector<std::size_t> stack{j};
    bool first = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        if (!first && (seen >> x & 1U)) continue;
        if (!first) seen |= Mask{1} << x;
        first = false;
        c.for_each_edge(x, [&](int w) {
            if ((within >> w & 1U) && !(seen >> w & 1U)) stack.push_back(static_cast<std::size_t>(w));
        });
    }
    (void)n;
    return seen;
}

SolveResult
expand(const Subgame& g, const Small& s, Mask win0)
{
    SolveResult r = SolveResult::none(g);
    r.unsolved = VertexSet(g.universe());
    for (std::size_t j = 0; j < s.ids.size(); ++j) {
        if (win0 >> j & 1U) r.win0.insert(s.ids[j]);
        else r.win1.insert(s.ids[j]);
    }
    return r;
}

} // namespace

SolveResult
brute_parity(const Subgame& g, const PriorityProfile& profile, std::size_t max_strategies)
{
    if (g.size() > 10) throw BudgetExceeded("brute_parity handles at most 10 vertices");
    const Small s = compact(g);
    const std::size_t n = s.ids.size();
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    StrategyCounter c(s, Player::P0, max_strategies);

    Mask win0 = 0;
    do {
        // w is bad if it lies on a cycle whose maximum is alpha(w) and odd
        Mask bad = 0;
        for (std::size_t w = 0; w < n; ++w) {
            const Priority p = profile.priority(s.ids[w]);
            if (is_even(p)) continue;
            Mask low = 0;
            for (std::size_t x = 0; x < n; ++x) {
                if (profile.priority(s.ids[x]) <= p) low |= Mask{1} << x;
            }
            if (reach_from(c, n, w, low) >> w & 1U) bad |= Mask{1} << w;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const Mask r = reach_from(c, n, v, all) | Mask{1} << v;
            if ((r & bad) == 0) win0 |= Mask{1} << v;
        }
    } while (c.advance());
    return expand(g, s, win0);
}

SolveResult
brute_generalized(const Subgame& g, const PriorityProfile& profile, std::size_t max_strategies)
{
    if (g.size() > 8) throw BudgetExceeded("brute_generalized handles at most 8 vertices");
    if (profile.dimensions() > 3) throw BudgetExceeded("brute_generalized handles at most 3 dimensions");
    const Small s = compact(g);
    const std::size_t n = s.ids.size();
    const std::size_t k = profile.dimensions();
    const Mask all = (Mask{1} << n) - 1;
    StrategyCounter c(s, Player::P1, max_strategies);

    // subsets whose per-dimension maxima are all even
    std::vector<Mask> even_sets;
    for (Mask set = 1; set <= all; ++set) {
        bool good = true;
        for (std::size_t l = 0; l < k && good; ++l) {
            Priority m = 0;
            for (std::size_t x = 0; x < n; ++x) {
                if (set >> x & 1U) m = std::max(m, profile.priority(s.ids[x], l));
            }
            good = is_even(m);
        }
        if (good) even_sets.push_back(set);
    }

    Mask win1 = 0;
    do {
        // union of the even sets that are strongly connected with an internal edge
        Mask good_cycles = 0;
        for (Mask set : even_sets) {
            bool strong = true;
            for (std::size_t x = 0; x < n && strong; ++x) {
                if (!(set >> x & 1U)) continue;
                strong = (reach_from(c, n, x, set) & set) == set;
            }
            if (strong) good_cycles |= set;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const Mask r = reach_from(c, n, v, all) | Mask{1} << v;
            if ((r & good_cycles) == 0) win1 |= Mask{1} << v;
        }
    } while (c.advance());
    return expand(g, s, all & ~win1);
}

Game
random_game(const RandomGameParams& params)
{
    const std::size_t n = std::max<std::size_t>(params.vertices, 1);
    const std::size_t maxdeg = std::min(std::max<std::size_t>(params.max_outdeg, 1), n);
    std::mt19937_64 rng(params.seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };

    std::vector<Player> owners(n);
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<std::vector<Priority>> dims(params.max_priority.size(), std::vector<Priority>(n));
    for (std::size_t v = 0; v < n; ++v) {
        owners[v] = player(static_cast<int>(uniform(0, 1)));
        const std::size_t deg = uniform(1, maxdeg);
        auto& out = succ[v];
        while (out.size() < deg) {
            const auto w = static_cast<VertexId>(uniform(0, n - 1));
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        }
        for (std::size_t l = 0; l < dims.size(); ++l)
            dims[l][v] = static_cast<Priority>(uniform(0, params.max_priority[l]));
    }

    Game game;
    game.kind = dims.size() == 1 ? GameKind::Parity : GameKind::Generalized;
    game.arena = GameArena(std::move(owners), succ);
    game.profile = PriorityProfile(std::move(dims));
    return game;
}

} // namespace pgpart
