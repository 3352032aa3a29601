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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgpart/vertex_set.hpp"

namespace pgpart {

using Priority = std::uint32_t;

enum class Player : std::uint8_t { P0 = 0, P1 = 1 };

constexpr Player opponent(Player p) { return p == Player::P0 ? Player::P1 : Player::P0; }
constexpr int index(Player p) { return static_cast<int>(p); }
constexpr Player player(int i) { return i == 0 ? Player::P0 : Player::P1; }

/// The player for whom priority p is favourable: even -> 0, odd -> 1.
constexpr Player parity_of(Priority p) { return (p & 1U) ? Player::P1 : Player::P0; }
constexpr bool is_even(Priority p) { return (p & 1U) == 0; }

/**
 * The game board: vertices 0..n-1, an owner per vertex and a deadlock-free
 * edge relation. Successor and predecessor lists are stored in CSR form.
 * Immutable after construction.
 */
class GameArena
{
public:
    GameArena() = default;

    /// Duplicate edges are dropped (first occurrence kept). Throws
    /// std::invalid_argument on an out-of-range successor or a vertex
    /// without successors.
    GameArena(std::vector<Player> owners,
              const std::vector<std::vector<VertexId>>& successors,
              std::vector<std::string> names = {});

    std::size_t vertex_count() const { return owners_.size(); }
    std::size_t edge_count() const { return succ_.size(); }

    Player owner(VertexId v) const { return owners_[v]; }

    std::span<const VertexId> successors(VertexId v) const
    {
        return {succ_.data() + succ_begin_[v], succ_.data() + succ_begin_[v + 1]};
    }
    std::span<const VertexId> predecessors(VertexId v) const
    {
        return {pred_.data() + pred_begin_[v], pred_.data() + pred_begin_[v + 1]};
    }

    bool has_names() const { return !names_.empty(); }
    /// Empty string when the vertex carries no name.
    const std::string& name(VertexId v) const;

    VertexSet vertices() const { return VertexSet::full(vertex_count()); }

private:
    std::vector<Player> owners_;
    std::vector<std::size_t> succ_begin_;
    std::vector<VertexId> succ_;
    std::vector<std::size_t> pred_begin_;
    std::vector<VertexId> pred_;
    std::vector<std::string> names_;
};

/**
 * k priority functions over the vertices of one arena. The per-dimension
 * maximum d_l is always the largest priority actually present.
 */
class PriorityProfile
{
public:
    PriorityProfile() = default;
    /// dims[l][v] is the priority of vertex v in dimension l; k = dims.size() >= 1.
    explicit PriorityProfile(std::vector<std::vector<Priority>> dims);

    static PriorityProfile single(std::vector<Priority> priorities);

    std::size_t dimensions() const { return dims_.size(); }
    std::size_t vertex_count() const { return dims_.empty() ? 0 : dims_.front().size(); }

    Priority priority(VertexId v, std::size_t dim = 0) const { return dims_[dim][v]; }
    std::span<const Priority> dimension(std::size_t dim) const { return dims_[dim]; }

    Priority max_priority(std::size_t dim = 0) const { return maxima_[dim]; }
    const std::vector<Priority>& maxima() const { return maxima_; }

    /// The k = 1 profile made of dimension `dim` alone.
    PriorityProfile project(std::size_t dim) const;

private:
    std::vector<std::vector<Priority>> dims_;
    std::vector<Priority> maxima_;
};

/**
 * A restriction view G|alive of an arena. Never copies the graph; only the
 * alive bitset is owned. Every alive vertex keeps an alive successor.
 */
class Subgame
{
public:
    explicit Subgame(const GameArena& arena) : arena_(&arena), alive_(arena.vertices()) {}
    Subgame(const GameArena& arena, VertexSet alive) : arena_(&arena), alive_(std::move(alive)) {}

    const GameArena& arena() const { return *arena_; }
    const VertexSet& alive() const { return alive_; }
    std::size_t universe() const { return arena_->vertex_count(); }

    bool contains(VertexId v) const { return alive_.contains(v); }
    bool empty() const { return alive_.empty(); }
    std::size_t size() const { return alive_.count(); }

    Player owner(VertexId v) const { return arena_->owner(v); }

    /// alive' = alive \ remove. The caller guarantees the result is
    /// deadlock-free (checked by assertion in debug builds).
    Subgame without(const VertexSet& remove) const;
    /// alive' = alive & keep, same precondition as without().
    Subgame restricted_to(const VertexSet& keep) const;

    std::size_t alive_out_degree(VertexId v) const;

    template <class F>
    void for_each_successor(VertexId v, F&& f) const
    {
        for (VertexId w : arena_->successors(v)) {
            if (alive_.contains(w)) f(w);
        }
    }
    template <class F>
    void for_each_predecessor(VertexId v, F&& f) const
    {
        for (VertexId w : arena_->predecessors(v)) {
            if (alive_.contains(w)) f(w);
        }
    }

    bool is_deadlock_free() const;

    /// Alive vertices satisfying pred.
    template <class Pred>
    VertexSet select(Pred&& pred) const
    {
        VertexSet out(universe());
        for (VertexId v : alive_) {
            if (pred(v)) out.insert(v);
        }
        return out;
    }

private:
    const GameArena* arena_;
    VertexSet alive_;
};

/// True iff player i cannot leave u and player 1-i can stay in u (within g).
bool is_trap(const Subgame& g, const VertexSet& u, Player i);

/// Largest priority of dimension `dim` over the alive vertices, if any.
std::optional<Priority> max_alive_priority(const Subgame& g, const PriorityProfile& profile, std::size_t dim = 0);

} // namespace pgpart
