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

#include "pgpart/omega.hpp"

#include "pgpart/attractor.hpp"

namespace pgpart {

VertexSet
win_reach(const Subgame& g, Player i, const VertexSet& target)
{
    return attractor(g, i, target);
}

VertexSet
win_safe(const Subgame& g, Player i, const VertexSet& bad)
{
    return g.alive() - attractor(g, opponent(i), bad);
}

VertexSet
win_buchi(const Subgame& g, Player i, const VertexSet& target)
{
    Subgame cur = g;
    VertexSet t = target & g.alive();
    for (;;) {
        if (cur.empty()) return cur.alive();
        VertexSet escape = cur.alive() - attractor(cur, i, t);
        if (escape.empty()) return cur.alive();
        VertexSet lost = attractor(cur, opponent(i), escape);
        cur = cur.without(lost);
        t -= lost;
    }
}

VertexSet
win_buchi_safe(const Subgame& g, Player i, const VertexSet& target, const VertexSet& bad)
{
    Subgame safe = g.without(attractor(g, opponent(i), bad));
    return win_buchi(safe, i, target & safe.alive());
}

VertexSet
win_genbuchi_safe(const Subgame& g, const std::vector<VertexSet>& targets, const VertexSet& bad)
{
    const std::size_t n = g.universe();
    const std::size_t k = targets.size();
    if (k == 0) return win_safe(g, Player::P0, bad);

    Subgame safe = g.without(attractor(g, Player::P1, bad));
    for (const auto& t : targets) {
        if (!t.intersects(safe.alive())) return VertexSet(n);
    }
    if (safe.empty()) return VertexSet(n);

    // compact numbering of the safe vertices
    std::vector<VertexId> ids = safe.alive().to_vector();
    std::vector<VertexId> local(n, 0);
    for (std::size_t j = 0; j < ids.size(); ++j) local[ids[j]] = static_cast<VertexId>(j);
    const std::size_t m = ids.size();
    auto node = [&](std::size_t j, std::size_t c) { return static_cast<VertexId>(c * m + j); };

    std::vector<Player> owners(k * m);
    std::vector<std::vector<VertexId>> succ(k * m);
    VertexSet accepting(k * m);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t j = 0; j < m; ++j) {
            const VertexId v = ids[j];
            const bool hit = targets[c].contains(v);
            const std::size_t next = hit ? (c + 1) % k : c;
            const VertexId self = node(j, c);
            owners[self] = g.owner(v);
            safe.for_each_successor(v, [&](VertexId w) { succ[self].push_back(node(local[w], next)); });
            if (hit && c == k - 1) accepting.insert(self);
        }
    }

    GameArena product(std::move(owners), succ);
    VertexSet won = win_buchi(Subgame(product), Player::P0, accepting);

    VertexSet out(n);
    for (std::size_t j = 0; j < m; ++j) {
        if (won.contains(node(j, 0))) out.insert(ids[j]);
    }
    return out;
}

} // namespace pgpart
