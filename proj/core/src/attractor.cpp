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

#include "pgpart/attractor.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace pgpart {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

/*
 * Backward propagation from `targets`. Every vertex that enters the reached
 * set (targets first, then attracted vertices) is queued exactly once, and each
 * of its alive predecessors is examined once. Opponent vertices keep a
 * countdown of alive successors not yet reached and enter when it hits zero.
 *
 * With include_targets the targets are members from the start (zero steps);
 * otherwise a target only joins the result when it is itself attracted.
 */
VertexSet
propagate(const Subgame& g, Player i, const VertexSet& targets, const VertexSet* avoid, bool include_targets,
          AttractorStats* stats)
{
    const auto& arena = g.arena();
    const auto& alive = g.alive();
    const std::size_t n = g.universe();

    VertexSet result(n);
    VertexSet reached(n);
    std::vector<VertexId> queue;
    std::vector<std::uint32_t> counter(n, kUnset);
    std::size_t scanned = 0;

    for (VertexId t : targets) {
        if (!alive.contains(t) || (avoid && avoid->contains(t))) continue;
        reached.insert(t);
        queue.push_back(t);
        if (include_targets) result.insert(t);
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId w = queue[head];
        for (VertexId p : arena.predecessors(w)) {
            ++scanned;
            if (!alive.contains(p) || result.contains(p)) continue;
            if (avoid && avoid->contains(p)) continue;
            if (arena.owner(p) != i) {
                auto& c = counter[p];
                if (c == kUnset) {
                    c = 0;
                    for (VertexId s : arena.successors(p)) {
                        ++scanned;
                        if (alive.contains(s)) ++c;
                    }
                }
                if (--c != 0) continue;
            }
            result.insert(p);
            if (!reached.contains(p)) {
                reached.insert(p);
                queue.push_back(p);
            }
        }
    }

    if (stats) stats->edges_scanned += scanned;
    return result;
}

} // namespace

VertexSet
cpre(const Subgame& g, Player i, const VertexSet& u)
{
    return g.select([&](VertexId v) {
        bool some = false;
        bool all = true;
        g.for_each_successor(v, [&](VertexId w) {
            if (u.contains(w)) some = true;
            else all = false;
        });
        return g.owner(v) == i ? some : all;
    });
}

VertexSet
attractor(const Subgame& g, Player i, const VertexSet& u, AttractorStats* stats)
{
    return propagate(g, i, u, nullptr, true, stats);
}

VertexSet
positive_attractor(const Subgame& g, Player i, const VertexSet& u, AttractorStats* stats)
{
    return propagate(g, i, u, nullptr, false, stats);
}

VertexSet
positive_safe_attractor(const Subgame& g, Player i, const VertexSet& u, const VertexSet& avoid, AttractorStats* stats)
{
    return propagate(g, i, u, &avoid, false, stats);
}

} // namespace pgpart
