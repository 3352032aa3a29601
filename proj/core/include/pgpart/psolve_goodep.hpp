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

#include "pgpart/arena.hpp"
#include "pgpart/extended_game.hpp"
#include "pgpart/solve_result.hpp"

namespace pgpart {

/**
 * GoodEp_i on the explicit product G x M_1 x ... x M_k: the greatest F such
 * that from (v, alpha(v)), v in F, player i can force in one or more steps a
 * visit to some (w, m) with w in F and m of parity i in every dimension.
 * For player 1 the profile must have one dimension.
 */
VertexSet good_ep_explicit(const Subgame& g, const PriorityProfile& profile, Player i,
                           std::size_t budget = kDefaultProductBudget, const SolveOptions& opts = {});

/// GoodEp_i for a parity game (k = 1).
VertexSet good_ep(const Subgame& g, const PriorityProfile& profile, Player i, const SolveOptions& opts = {});

/// GoodEp_0 of a generalized game on the explicit product; BudgetExceeded if too large.
VertexSet gen_good_ep0_explicit(const Subgame& g, const PriorityProfile& profile,
                                std::size_t budget = kDefaultProductBudget, const SolveOptions& opts = {});

enum class GoodEpMode : std::uint8_t { Explicit, Antichain };

/**
 * Partial solver for parity games: tries player 0 then player 1, attracts
 * and restarts. With GoodEpMode::Antichain the player-0 set is computed on
 * antichains; player 1 always uses the explicit product.
 */
SolveResult good_ep_solver(const Subgame& g, const PriorityProfile& profile, GoodEpMode mode,
                           const SolveOptions& opts = {});
inline SolveResult good_ep_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {})
{
    return good_ep_solver(g, profile, GoodEpMode::Explicit, opts);
}

/**
 * Generalized partial solver: GoodEp_1 on each dimension in turn, then
 * GoodEp_0 over all dimensions, computed on the explicit product or on
 * antichains according to `mode`.
 */
SolveResult gen_good_ep_solver(const Subgame& g, const PriorityProfile& profile, GoodEpMode mode,
                               const SolveOptions& opts = {});

} // namespace pgpart
