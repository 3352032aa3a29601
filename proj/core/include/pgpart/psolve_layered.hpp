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
#include <string>
#include <utility>
#include <vector>

#include "pgpart/arena.hpp"
#include "pgpart/solve_result.hpp"

namespace pgpart {

/**
 * A set P_{>=q} of priorities of one player.
 *
 * Scalar: priorities of dimension `dim` with the player's parity from q up to
 * d(i), the largest such priority of that dimension.
 * Vector (player 0 only): q has one even entry per dimension, and the ladder
 * descends from d(0) = (d_1(0), ..., d_k(0)) with p - 2 taken componentwise
 * as max(p_l - 2, q_l).
 */
struct LayerSpec
{
    enum class Kind : std::uint8_t { Scalar, Vector };

    Kind kind = Kind::Scalar;
    Player player = Player::P0;
    std::vector<Priority> q;
    std::size_t dim = 0;

    static LayerSpec scalar(Player i, Priority q, std::size_t dim = 0) { return {Kind::Scalar, i, {q}, dim}; }
    static LayerSpec vector(std::vector<Priority> q) { return {Kind::Vector, Player::P0, std::move(q), 0}; }

    friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

std::string to_string(const LayerSpec& s);

/// Rungs of the ladder from the top one down to q.
std::vector<std::vector<Priority>> ladder(const LayerSpec& spec, const PriorityProfile& profile);

/**
 * The specs scanned by the layered solvers.
 * Parity list (generalized = false, k = 1): rungs q = d(0), d(0) - 2, ... for
 * player 0 and q = d(1), d(1) - 2, ... for player 1, interleaved with player
 * 0 first on each rung.
 * Generalized list: the scalar player-1 specs of every dimension, then the
 * player-0 vector specs for every vector q of even priorities; inside each
 * group shorter ladders come first, ties broken by dimension ascending for
 * scalars and by q lexicographically descending for vectors.
 */
std::vector<LayerSpec> build_list_P(const PriorityProfile& profile, bool generalized);
inline std::vector<LayerSpec> build_list_P(const PriorityProfile& profile)
{
    return build_list_P(profile, profile.dimensions() > 1);
}

/**
 * Layered attractor of a scalar spec: with B above the top rung empty,
 * B_p = B_{p+2} u PSafeAttr_i(U_p u B_{p+2}, U'_p \ B_{p+2}) where
 * U_p = u n {alpha >= p} and U'_p are the opponent's priorities above p.
 * Returns B_q.
 */
VertexSet layered_attractor(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec,
                            const VertexSet& u);

/// Fixpoint of F_j = LayAttr(F_{j-1}) n F_{j-1} from F_0 = {alpha in P_{>=q}}.
VertexSet lay_ep(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec,
                 const SolveOptions& opts = {});

/// Partial solver for parity games over build_list_P(profile, false).
SolveResult lay_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {});

/**
 * G_p = G x 2^{1..k}: a state (v, N) records the dimensions l for which an
 * even priority >= p_l has been seen; moving to v' adds N_p(v'). States are
 * numbered v * 2^k + N over the whole universe and generated on demand.
 */
class MemoryGame
{
public:
    using Mask = std::uint32_t;
    static constexpr std::size_t kMaxDimensions = 20;

    /// Throws std::invalid_argument when k exceeds kMaxDimensions.
    MemoryGame(const Subgame& g, const PriorityProfile& profile, std::vector<Priority> p);

    const std::vector<Priority>& p() const { return p_; }
    Mask full() const { return full_; }
    /// N_p(v)
    Mask initial(VertexId v) const { return np_[v]; }
    Mask step(Mask n, VertexId next) const { return n | np_[next]; }

    std::size_t state_count() const { return g_->universe() << k_; }
    std::size_t node(VertexId v, Mask n) const { return (std::size_t{v} << k_) | n; }
    VertexId vertex(std::size_t s) const { return static_cast<VertexId>(s >> k_); }
    Mask mask(std::size_t s) const { return static_cast<Mask>(s & full_); }
    Player owner(std::size_t s) const { return g_->owner(vertex(s)); }
    std::size_t out_degree(std::size_t s) const { return g_->alive_out_degree(vertex(s)); }

    template <class F>
    void for_each_successor(std::size_t s, F&& f) const
    {
        const Mask n = mask(s);
        g_->for_each_successor(vertex(s), [&](VertexId w) { f(node(w, step(n, w))); });
    }

    /// (u, N) with (u, v') an alive edge and N | N_p(v') = N'.
    template <class F>
    void for_each_predecessor(std::size_t s, F&& f) const
    {
        const VertexId vp = vertex(s);
        const Mask np = mask(s);
        const Mask add = np_[vp];
        if ((add & ~np) != 0) return;
        const Mask base = np & ~add;
        g_->for_each_predecessor(vp, [&](VertexId u) {
            for (Mask sub = add;; sub = (sub - 1) & add) {
                f(node(u, base | sub));
                if (sub == 0) break;
            }
        });
    }

private:
    const Subgame* g_;
    std::vector<Priority> p_;
    std::size_t k_;
    Mask full_;
    std::vector<Mask> np_;
};

/**
 * Generalized layered attractor for a player-0 vector spec. For each rung p,
 * top down, with C the vertices gathered at higher rungs:
 * B_p = PSafeAttr_0(G_p, T_p u C x 2^k, T'_p \ C x 2^k), where
 * T_p = U x {all dimensions} and T'_p holds the vertices with an odd
 * priority above p_l in some dimension; then v joins C when
 * (v, N_p(v)) is in B_p. Returns C after the bottom rung.
 */
VertexSet gen_layered_attractor(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec,
                                const VertexSet& u);

/// Scalar specs go to lay_ep on their dimension; vector specs use the generalized attractor.
VertexSet gen_lay_ep(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec,
                     const SolveOptions& opts = {});

/// Partial solver for generalized games over build_list_P(profile, true).
SolveResult gen_lay_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {});

} // namespace pgpart
