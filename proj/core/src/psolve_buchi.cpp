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

#include "pgpart/psolve_buchi.hpp"

#include <algorithm>
#include <sstream>

#include "pgpart/attractor.hpp"
#include "pgpart/omega.hpp"

namespace pgpart {

std::string
to_string(const PriorityElement& e)
{
    std::ostringstream out;
    if (e.kind == PriorityElement::Kind::OddAt) {
        out << "OddAt(" << e.priorities.front() << "," << e.dim + 1 << ")";
        return out.str();
    }
    out << "EvenVector(";
    for (std::size_t l = 0; l < e.priorities.size(); ++l) out << (l ? "," : "") << e.priorities[l];
    out << ")";
    return out.str();
}

ElementList::ElementList(std::vector<Priority> maxima) : maxima_(std::move(maxima))
{
    Priority top = 0;
    for (Priority m : maxima_) top = std::max(top, m);
    for (Priority p = top + 1; p-- > 0;) {
        if (is_even(p)) continue;
        for (std::size_t l = 0; l < maxima_.size(); ++l) {
            if (p <= maxima_[l]) odd_.push_back(PriorityElement::odd_at(p, l));
        }
    }
    reset();
}

void
ElementList::reset()
{
    odd_pos_ = 0;
    even_.assign(maxima_.size(), 0);
    for (std::size_t l = 0; l < maxima_.size(); ++l) even_[l] = maxima_[l] & ~Priority{1};
    even_done_ = maxima_.empty();
}

std::optional<PriorityElement>
ElementList::next()
{
    if (odd_pos_ < odd_.size()) return odd_[odd_pos_++];
    if (even_done_) return std::nullopt;
    PriorityElement e = PriorityElement::even_vector(even_);
    // odometer, last dimension fastest
    std::size_t l = even_.size();
    while (l-- > 0) {
        if (even_[l] >= 2) {
            even_[l] -= 2;
            break;
        }
        even_[l] = maxima_[l] & ~Priority{1};
        if (l == 0) even_done_ = true;
    }
    return e;
}

std::vector<PriorityElement>
build_list_L(const PriorityProfile& profile)
{
    ElementList list(profile.maxima());
    std::vector<PriorityElement> out;
    while (auto e = list.next()) out.push_back(std::move(*e));
    return out;
}

namespace {

// present[l][p]: priority p of dimension l occurs in g
std::vector<std::vector<bool>>
present_priorities(const Subgame& g, const PriorityProfile& profile)
{
    std::vector<std::vector<bool>> present(profile.dimensions());
    for (std::size_t l = 0; l < present.size(); ++l) present[l].assign(profile.max_priority(l) + 1, false);
    for (VertexId v : g.alive()) {
        for (std::size_t l = 0; l < present.size(); ++l) present[l][profile.priority(v, l)] = true;
    }
    return present;
}

VertexSet
parity_attempt(const Subgame& g, const PriorityProfile& profile, std::size_t dim, Priority p)
{
    const Player i = parity_of(p);
    VertexSet u = g.select([&](VertexId v) { return profile.priority(v, dim) == p; });
    VertexSet bad = g.select([&](VertexId v) {
        const Priority a = profile.priority(v, dim);
        return a > p && parity_of(a) != i;
    });
    VertexSet w = win_buchi_safe(g, i, u, bad);
    if (w.empty()) return w;
    return attractor(g, i, w);
}

VertexSet
vector_attempt(const Subgame& g, const PriorityProfile& profile, const std::vector<Priority>& ps)
{
    const std::size_t k = ps.size();
    std::vector<VertexSet> targets;
    targets.reserve(k);
    for (std::size_t l = 0; l < k; ++l)
        targets.push_back(g.select([&](VertexId v) { return profile.priority(v, l) == ps[l]; }));
    VertexSet bad = g.select([&](VertexId v) {
        for (std::size_t l = 0; l < k; ++l) {
            const Priority a = profile.priority(v, l);
            if (!is_even(a) && a > ps[l]) return true;
        }
        return false;
    });
    VertexSet w = win_genbuchi_safe(g, targets, bad);
    if (w.empty()) return w;
    return attractor(g, Player::P0, w);
}

} // namespace

SolveResult
buchi_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts)
{
    SolveResult res = SolveResult::none(g);
    Subgame cur = g;
    for (bool found = true; found && !cur.empty();) {
        found = false;
        const auto present = present_priorities(cur, profile);
        for (Priority p = profile.max_priority() + 1; p-- > 0;) {
            check_cancel(opts);
            if (!present[0][p]) continue;
            VertexSet w = parity_attempt(cur, profile, 0, p);
            if (w.empty()) continue;
            res.winning(parity_of(p)) |= w;
            cur = cur.without(w);
            found = true;
            break;
        }
    }
    res.unsolved = cur.alive();
    return res;
}

SolveResult
gen_buchi_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts)
{
    SolveResult res = SolveResult::none(g);
    Subgame cur = g;
    ElementList list(profile.maxima());
    for (bool found = true; found && !cur.empty();) {
        found = false;
        const auto present = present_priorities(cur, profile);
        list.reset();
        while (auto e = list.next()) {
            check_cancel(opts);
            VertexSet w;
            Player winner = Player::P0;
            if (e->kind == PriorityElement::Kind::OddAt) {
                const Priority p = e->priorities.front();
                if (!present[e->dim][p]) continue;
                w = parity_attempt(cur, profile, e->dim, p);
                winner = Player::P1;
            } else {
                bool all = true;
                for (std::size_t l = 0; l < e->priorities.size(); ++l) all = all && present[l][e->priorities[l]];
                if (!all) continue;
                w = vector_attempt(cur, profile, e->priorities);
            }
            if (w.empty()) continue;
            res.winning(winner) |= w;
            cur = cur.without(w);
            found = true;
            break;
        }
    }
    res.unsolved = cur.alive();
    return res;
}

} // namespace pgpart
