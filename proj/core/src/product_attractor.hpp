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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "pgpart/solve_result.hpp"

namespace pgpart::detail {

/*
 * Positive safe attractor over an implicitly generated product. `game` must
 * provide state_count(), owner(s), out_degree(s) and for_each_predecessor(s, f).
 * Seeds are the target states (assumed outside the avoid set); they only
 * become members when attracted in one or more steps. States for which
 * avoid(s) holds are never members.
 */
template <class Game, class Avoid>
std::vector<char>
positive_attractor_states(const Game& game, Player i, const std::vector<std::size_t>& seeds, Avoid&& avoid,
                          const SolveOptions& opts)
{
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    const std::size_t states = game.state_count();
    std::vector<char> member(states, 0);
    std::vector<char> queued(states, 0);
    std::vector<std::uint32_t> counter(states, unset);
    std::vector<std::size_t> queue;
    queue.reserve(seeds.size());
    for (std::size_t s : seeds) {
        if (queued[s]) continue;
        queued[s] = 1;
        queue.push_back(s);
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
        if ((head & 0xFFFF) == 0) check_cancel(opts);
        game.for_each_predecessor(queue[head], [&](std::size_t p) {
            if (member[p] || avoid(p)) return;
            if (game.owner(p) != i) {
                auto& c = counter[p];
                if (c == unset) c = static_cast<std::uint32_t>(game.out_degree(p));
                if (--c != 0) return;
            }
            member[p] = 1;
            if (!queued[p]) {
                queued[p] = 1;
                queue.push_back(p);
            }
        });
    }
    return member;
}

} // namespace pgpart::detail
