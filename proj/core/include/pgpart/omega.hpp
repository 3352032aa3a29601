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

#include <vector>

#include "pgpart/arena.hpp"

// Exact solvers for the reachability, safety, Buchi and generalized Buchi
// objectives used as building blocks by the partial solvers.

namespace pgpart {

VertexSet win_reach(const Subgame& g, Player i, const VertexSet& target);

/// alive \ Attr_{1-i}(bad)
VertexSet win_safe(const Subgame& g, Player i, const VertexSet& bad);

/// Classical peeling loop; O(|V| * |E|).
VertexSet win_buchi(const Subgame& g, Player i, const VertexSet& target);

/// Buchi(target) and Safe(bad): Buchi solved inside alive \ Attr_{1-i}(bad).
VertexSet win_buchi_safe(const Subgame& g, Player i, const VertexSet& target, const VertexSet& bad);

/**
 * Player 0 wins GenBuchi(targets) and Safe(bad). Reduced to Buchi on the
 * round-robin counter product (v, c), c in [0, k): the counter advances when
 * the current vertex is in targets[c], and the Buchi set is the wrap-around
 * states (v, k-1) with v in targets[k-1]. Projected on counter 0.
 */
VertexSet win_genbuchi_safe(const Subgame& g, const std::vector<VertexSet>& targets, const VertexSet& bad);

} // namespace pgpart
