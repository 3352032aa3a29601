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
#include <optional>
#include <utility>
#include <vector>

#include "pgpart/arena.hpp"
#include "pgpart/extended_game.hpp"
#include "pgpart/solve_result.hpp"

namespace pgpart {

/**
 * The order on memories used by the player-0 good-episode computation.
 * Per dimension, a larger even memory is smaller, a smaller odd memory is
 * smaller, and every even memory is below every odd one; for d = 4 this is
 * the chain 4 < 2 < 0 < 1 < 3. Vectors compare componentwise, and memories
 * attached to different vertices never compare.
 */
class MemoryOrder
{
public:
    MemoryOrder() = default;
    /// maxima[l] = d_l, needed by down() only.
    explicit MemoryOrder(std::vector<Priority> maxima) : maxima_(std::move(maxima)) {}

    const std::vector<Priority>& maxima() const { return maxima_; }
    std::size_t dimensions() const { return maxima_.size(); }

    static bool leq(Priority a, Priority b);
    static bool leq(const Memory& a, const Memory& b);
    static bool leq(const ExtendedVertex& x, const ExtendedVertex& y);

    /// Greatest lower bound.
    static Priority meet(Priority a, Priority b);
    static Memory meet(const Memory& a, const Memory& b);
    /// Contract violation (std::invalid_argument) for distinct vertices.
    static ExtendedVertex meet(const ExtendedVertex& x, const ExtendedVertex& y);

    static Priority up(Priority m, Priority p) { return m > p ? m : p; }
    static Memory up(const Memory& m, const std::vector<Priority>& p);

    /**
     * Largest m with up(m, p) below m' in the order, per dimension:
     * p even: m' if p < m', else max(p - 1, 0);
     * p odd: m' if p <= m', else p + 1, undefined when p = d.
     */
    static std::optional<Priority> down(Priority mp, Priority p, Priority d);
    std::optional<Memory> down(const Memory& mp, const std::vector<Priority>& p) const;

private:
    std::vector<Priority> maxima_;
};

/**
 * A closed subset of V x M represented by its maximal elements, stored per
 * vertex. Each per-vertex list is kept pairwise incomparable and sorted, so
 * two antichains are equal iff they represent the same closed set.
 */
class Antichain
{
public:
    explicit Antichain(std::size_t universe = 0) : at_(universe) {}

    std::size_t universe() const { return at_.size(); }
    bool empty() const;
    std::size_t size() const;

    /// Adds x unless dominated, dropping the incumbents it dominates.
    /// Returns true if the represented set grew.
    bool insert(VertexId v, const Memory& m);
    bool insert(const ExtendedVertex& x) { return insert(x.v, x.m); }

    /// x is in the represented closed set.
    bool member(VertexId v, const Memory& m) const;
    bool member(const ExtendedVertex& x) const { return member(x.v, x.m); }

    const std::vector<Memory>& at(VertexId v) const { return at_[v]; }
    std::vector<ExtendedVertex> elements() const;

    /// Union of the represented sets.
    Antichain& operator|=(const Antichain& other);
    friend Antichain operator|(Antichain a, const Antichain& b) { return a |= b; }

    friend bool operator==(const Antichain&, const Antichain&) = default;

private:
    std::vector<std::vector<Memory>> at_;
};

Antichain antichain_insert(Antichain a, const ExtendedVertex& x);
/// Intersection of the represented sets: pairwise meets, maximized.
Antichain antichain_meet(const Antichain& a, const Antichain& b);

/**
 * Antichain of the controllable predecessors for player 0 in G x M of the
 * closed set represented by a. Player-0 vertices collect down(m', alpha(v))
 * over their successors; player-1 vertices take the meet-product over all
 * successors of those per-successor sets, and contribute nothing when some
 * successor offers no admissible memory. Memory bounds are the maxima of
 * `order`.
 */
Antichain antichain_cpre0(const Subgame& g, const PriorityProfile& profile, const MemoryOrder& order,
                          const Antichain& a);

/// GoodEp_0 computed entirely on antichains; memory bounds are the alive maxima.
VertexSet antichain_good_ep0(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {});

} // namespace pgpart
