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

#include "pgpart/arena.hpp"

namespace pgpart {

/// Work counters for the linear-time check of the attractor routines.
struct AttractorStats
{
    std::size_t edges_scanned = 0;
};

/// Vertices from which player i reaches u in exactly one step.
VertexSet cpre(const Subgame& g, Player i, const VertexSet& u);

/// Vertices from which player i forces a visit to u in zero or more steps.
VertexSet attractor(const Subgame& g, Player i, const VertexSet& u, AttractorStats* stats = nullptr);

/// Vertices from which player i forces a visit to u in one or more steps.
VertexSet positive_attractor(const Subgame& g, Player i, const VertexSet& u, AttractorStats* stats = nullptr);

/**
 * Positive attractor to u that never visits `avoid`, the start vertex
 * included: no member of avoid is ever in the result and targets inside
 * avoid are dropped. An opponent vertex with a successor in avoid can never
 * be forced, since the opponent may take that edge.
 */
VertexSet positive_safe_attractor(const Subgame& g, Player i, const VertexSet& u, const VertexSet& avoid,
                                  AttractorStats* stats = nullptr);

} // namespace pgpart
