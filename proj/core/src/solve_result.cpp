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

#include "pgpart/solve_result.hpp"

#include <sstream>

namespace pgpart {

SolveResult
SolveResult::none(const Subgame& g)
{
    return {VertexSet(g.universe()), VertexSet(g.universe()), g.alive()};
}

PartialSolver
trivial_partial_solver()
{
    return {"trivial", [](const Subgame& g, const PriorityProfile&, const SolveOptions&) { return SolveResult::none(g); }};
}

std::optional<std::string>
audit_partial_result(const Subgame& g, const SolveResult& r)
{
    const auto& alive = g.alive();
    if (r.win0.intersects(r.win1) || r.win0.intersects(r.unsolved) || r.win1.intersects(r.unsolved)) {
        return "regions overlap";
    }
    if ((r.win0 | r.win1 | r.unsolved) != alive) return "regions do not cover the subgame";

    Subgame rest(g.arena(), r.unsolved);
    if (!rest.is_deadlock_free()) return "unsolved region has a deadlock";

    for (VertexId v : r.unsolved) {
        const Player owner = g.owner(v);
        std::optional<VertexId> bad;
        g.for_each_successor(v, [&](VertexId w) {
            if (!r.unsolved.contains(w) && !r.winning(opponent(owner)).contains(w)) bad = w;
        });
        if (bad) {
            std::ostringstream os;
            os << "escape condition violated: player " << index(owner) << " vertex " << v << " leaves to " << *bad
               << " which is not in the opponent's region";
            return os.str();
        }
    }
    return std::nullopt;
}

} // namespace pgpart
