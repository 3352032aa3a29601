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

#include "pgpart/arena.hpp"
#include "pgpart/solve_result.hpp"

namespace pgpart {

/**
 * Zielonka's recursive algorithm for parity games (k = 1). Complete:
 * the result has an empty unsolved region.
 */
SolveResult zielonka(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {});

/**
 * Zielonka's algorithm with a partial solver run at the start of every
 * recursive activation; recursion only continues on what the partial solver
 * left unsolved. Correct whenever the partial solver satisfies the escape
 * condition checked by audit_partial_result (verified when opts.audit).
 */
SolveResult ziel_with_psolver(const Subgame& g, const PriorityProfile& profile, const PartialSolver& ps,
                              const SolveOptions& opts = {});

/**
 * Complete solver for generalized parity games: player 0 wins the conjunction
 * of the k even-parity conditions, player 1 the disjunction of the odd ones.
 *
 * Each activation looks at the per-dimension maxima of the current subgame.
 * If all are even, the node is player 0's: for each dimension l the vertices
 * carrying the top priority of l are 0-attracted and the rest solved
 * recursively; the first non-empty player-1 region found is 1-attracted and
 * removed before recursing on what is left. If every dimension yields nothing
 * for player 1, player 0 wins the whole subgame. Otherwise the node is player
 * 1's: top odd priorities are stripped dimension by dimension until every
 * maximum is even, the stripped vertices are 1-attracted, and the symmetric
 * step is taken with a single child. This is Zielonka's Muller-game recursion
 * specialised to the generalized parity condition; for k = 1 it computes the
 * same regions as zielonka().
 */
SolveResult gen_zielonka(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {});

/// gen_zielonka with a partial solver at every activation.
SolveResult gen_ziel_with_psolver(const Subgame& g, const PriorityProfile& profile, const PartialSolver& ps,
                                  const SolveOptions& opts = {});

} // namespace pgpart
