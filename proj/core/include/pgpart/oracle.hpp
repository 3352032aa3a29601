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
#include <vector>

#include "pgpart/arena.hpp"
#include "pgpart/io.hpp"
#include "pgpart/solve_result.hpp"

// Brute-force reference solvers for tiny games and the random game generator
// used by the property tests.

namespace pgpart {

inline constexpr std::size_t kOracleStrategyBudget = 1'000'000;

/**
 * Exact regions of a parity game by enumerating player-0 memoryless
 * strategies. Under a fixed strategy player 0 wins from v iff no cycle
 * reachable from v has an odd maximum. Throws BudgetExceeded when the alive
 * part has more than 10 vertices or more than `max_strategies` strategies.
 */
SolveResult brute_parity(const Subgame& g, const PriorityProfile& profile,
                         std::size_t max_strategies = kOracleStrategyBudget);

/**
 * Exact regions of a generalized parity game by enumerating player-1
 * memoryless strategies. Under a fixed strategy player 1 wins from v iff no
 * vertex set S reachable from v is strongly connected (with an internal edge)
 * and has an even maximum in every dimension. Throws BudgetExceeded beyond 8
 * alive vertices, 3 dimensions or `max_strategies` strategies.
 */
SolveResult brute_generalized(const Subgame& g, const PriorityProfile& profile,
                              std::size_t max_strategies = kOracleStrategyBudget);

struct RandomGameParams
{
    std::size_t vertices = 8;
    std::size_t max_outdeg = 3;
    /// One entry per dimension: priorities are drawn uniformly from [0, d_l].
    std::vector<Priority> max_priority{4};
    std::uint64_t seed = 0;
};

/// Seeded, deterministic; every vertex gets 1..max_outdeg distinct successors.
Game random_game(const RandomGameParams& params);

} // namespace pgpart
