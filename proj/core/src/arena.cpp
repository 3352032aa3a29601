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

#include "pgpart/arena.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pgpart {

GameArena::GameArena(std::vector<Player> owners,
                     const std::vector<std::vector<VertexId>>& successors,
                     std::vector<std::string> names)
    : owners_(std::move(owners)), names_(std::move(names))
{
    const std::size_t n = owners_.size();
    if (successors.size() != n) {
        throw std::invalid_argument("successor table size does not match vertex count");
    }
    if (!names_.empty() && names_.size() != n) {
        throw std::invalid_argument("name table size does not match vertex count");
    }

    succ_begin_.assign(n + 1, 0);
    std::vector<char> seen(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        succ_begin_[v] = succ_.size();
        for (VertexId w : successors[v]) {
            if (w >= n) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " has successor " + std::to_string(w) +
                                            " out of range");
            }
            if (seen[w]) continue;
            seen[w] = 1;
            succ_.push_back(w);
        }
        for (std::size_t e = succ_begin_[v]; e < succ_.size(); ++e) seen[succ_[e]] = 0;
        if (succ_.size() == succ_begin_[v]) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no successor (deadlock)");
        }
    }
    succ_begin_[n] = succ_.size();

    // transpose
    pred_begin_.assign(n + 1, 0);
    for (VertexId w : succ_) ++pred_begin_[w + 1];
    for (std::size_t v = 0; v < n; ++v) pred_begin_[v + 1] += pred_begin_[v];
    pred_.resize(succ_.size());
    std::vector<std::size_t> fill(pred_begin_.begin(), pred_begin_.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t e = succ_begin_[v]; e < succ_begin_[v + 1]; ++e) {
            pred_[fill[succ_[e]]++] = static_cast<VertexId>(v);
        }
    }
}

const std::string&
GameArena::name(VertexId v) const
{
    static const std::string none;
    return names_.empty() ? none : names_[v];
}

PriorityProfile::PriorityProfile(std::vector<std::vector<Priority>> dims) : dims_(std::move(dims))
{
    if (dims_.empty()) throw std::invalid_argument("a priority profile needs at least one dimension");
    const std::size_t n = dims_.front().size();
    maxima_.assign(dims_.size(), 0);
    for (std::size_t l = 0; l < dims_.size(); ++l) {
        if (dims_[l].size() != n) throw std::invalid_argument("priority dimensions differ in length");
        if (!dims_[l].empty()) maxima_[l] = *std::max_element(dims_[l].begin(), dims_[l].end());
    }
}

PriorityProfile
PriorityProfile::single(std::vector<Priority> priorities)
{
    std::vector<std::vector<Priority>> dims;
    dims.push_back(std::move(priorities));
    return PriorityProfile(std::move(dims));
}

PriorityProfile
PriorityProfile::project(std::size_t dim) const
{
    return single(dims_.at(dim));
}

Subgame
Subgame::without(const VertexSet& remove) const
{
    Subgame out(*arena_, alive_ - remove);
    assert(out.is_deadlock_free() && "removed set is not a trap complement");
    return out;
}

Subgame
Subgame::restricted_to(const VertexSet& keep) const
{
    Subgame out(*arena_, alive_ & keep);
    assert(out.is_deadlock_free() && "restriction induces a deadlock");
    return out;
}

std::size_t
Subgame::alive_out_degree(VertexId v) const
{
    std::size_t n = 0;
    for (VertexId w : arena_->successors(v)) n += alive_.contains(w) ? 1 : 0;
    return n;
}

bool
Subgame::is_deadlock_free() const
{
    for (VertexId v : alive_) {
        bool any = false;
        for (VertexId w : arena_->successors(v)) {
            if (alive_.contains(w)) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    }
    return true;
}

bool
is_trap(const Subgame& g, const VertexSet& u, Player i)
{
    for (VertexId v : u) {
        bool all_in = true;
        bool some_in = false;
        g.for_each_successor(v, [&](VertexId w) {
            if (u.contains(w)) some_in = true;
            else all_in = false;
        });
        if (g.owner(v) == i ? !all_in : !some_in) return false;
    }
    return true;
}

std::optional<Priority>
max_alive_priority(const Subgame& g, const PriorityProfile& profile, std::size_t dim)
{
    std::optional<Priority> best;
    for (VertexId v : g.alive()) {
        Priority p = profile.priority(v, dim);
        if (!best || p > *best) best = p;
    }
    return best;
}

} // namespace pgpart
