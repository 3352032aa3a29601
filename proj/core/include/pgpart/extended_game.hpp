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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pgpart/arena.hpp"
#include "pgpart/solve_result.hpp"

namespace pgpart {

/// Per-dimension memory of the maximum priority seen so far.
using Memory = std::vector<Priority>;

struct ExtendedVertex
{
    VertexId v = 0;
    Memory m;

    friend bool operator==(const ExtendedVertex&, const ExtendedVertex&) = default;
    friend auto operator<=>(const ExtendedVertex&, const ExtendedVertex&) = default;
};

/// Default cap on |alive| * prod(d_l + 1) for materialized products.
inline constexpr std::size_t kDefaultProductBudget = std::size_t{1} << 26;

/**
 * The product of a subgame with max-priority memory, M_1 x ... x M_k with
 * M_l = [0, d_l] and d_l the largest priority of dimension l among the alive
 * vertices. Edges ((v, m), (v', m')) exist iff (v, v') is an alive edge and
 * m'_l = max(m_l, alpha_l(v)) for every l: the update uses the priority of
 * the source vertex.
 *
 * States are numbered densely as local(v) * memory_count() + code(m), where
 * code is the mixed-radix encoding of m. Nothing but the index tables is
 * stored; edges are generated on demand.
 */
class ExtendedGame
{
public:
    using Node = std::size_t;

    /// Throws BudgetExceeded when the state count exceeds the budget.
    ExtendedGame(const Subgame& g, const PriorityProfile& profile, std::size_t budget = kDefaultProductBudget);

    const Subgame& base() const { return *g_; }
    const PriorityProfile& profile() const { return *profile_; }
    const std::vector<Priority>& bounds() const { return bounds_; }
    std::size_t dimensions() const { return bounds_.size(); }

    std::size_t memory_count() const { return memory_count_; }
    std::size_t node_count() const { return ids_.size() * memory_count_; }
    std::size_t state_count() const { return node_count(); }

    std::size_t encode(const Memory& m) const;
    Memory decode(std::size_t code) const;
    Priority component(std::size_t code, std::size_t dim) const { return (code / stride_[dim]) % (bounds_[dim] + 1); }

    bool has(VertexId v) const { return g_->contains(v); }
    Node node(VertexId v, std::size_t code) const { return std::size_t{local_[v]} * memory_count_ + code; }
    VertexId vertex(Node n) const { return ids_[n / memory_count_]; }
    std::size_t code(Node n) const { return n % memory_count_; }
    Player owner(Node n) const { return g_->owner(vertex(n)); }

    /// Code of the memory (alpha_1(v), ..., alpha_k(v)).
    std::size_t own_code(VertexId v) const;
    /// Code of max(m, alpha(v)) componentwise.
    std::size_t update(VertexId v, std::size_t code) const;

    std::size_t out_degree(Node n) const { return g_->alive_out_degree(vertex(n)); }

    template <class F>
    void for_each_successor(Node n, F&& f) const
    {
        const VertexId v = vertex(n);
        const std::size_t next = update(v, code(n));
        g_->for_each_successor(v, [&](VertexId w) { f(node(w, next)); });
    }

    /**
     * Predecessors of (v', m'): for every alive edge (u, v') and every
     * dimension, alpha_l(u) < m'_l forces m_l = m'_l, alpha_l(u) = m'_l allows
     * any m_l in [0, m'_l], and alpha_l(u) > m'_l rules u out.
     */
    template <class F>
    void for_each_predecessor(Node n, F&& f) const
    {
        const VertexId vp = vertex(n);
        const std::size_t cp = code(n);
        const std::size_t k = bounds_.size();
        std::vector<Priority> lo(k), hi(k), cur(k);
        g_->for_each_predecessor(vp, [&](VertexId u) {
            for (std::size_t l = 0; l < k; ++l) {
                const Priority target = component(cp, l);
                const Priority a = profile_->priority(u, l);
                if (a > target) return;
                lo[l] = a < target ? target : 0;
                hi[l] = target;
            }
            cur = lo;
            for (;;) {
                std::size_t c = 0;
                for (std::size_t l = 0; l < k; ++l) c += cur[l] * stride_[l];
                f(node(u, c));
                std::size_t l = 0;
                while (l < k && cur[l] == hi[l]) {
                    cur[l] = lo[l];
                    ++l;
                }
                if (l == k) break;
                ++cur[l];
            }
        });
    }

private:
    const Subgame* g_;
    const PriorityProfile* profile_;
    std::vector<Priority> bounds_;
    std::vector<std::size_t> stride_;
    std::size_t memory_count_ = 1;
    std::vector<VertexId> ids_;
    std::vector<std::uint32_t> local_;
};

} // namespace pgpart
