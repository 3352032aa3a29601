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

#include "pgpart/psolve_goodep.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "pgpart/antichain.hpp"
#include "pgpart/attractor.hpp"
#include "product_attractor.hpp"

namespace pgpart {

VertexSet
good_ep_explicit(const Subgame& g, const PriorityProfile& profile, Player i, std::size_t budget,
                 const SolveOptions& opts)
{
    if (i == Player::P1 && profile.dimensions() != 1)
        throw std::invalid_argument("GoodEp_1 is defined on a single dimension");
    if (g.empty()) return VertexSet(g.universe());

    const ExtendedGame eg(g, profile, budget);

    // memories whose every entry has player i's parity
    std::vector<char> good(eg.memory_count(), 1);
    for (std::size_t c = 0; c < eg.memory_count(); ++c) {
        for (std::size_t l = 0; l < eg.dimensions(); ++l) {
            if (parity_of(eg.component(c, l)) != i) good[c] = 0;
        }
    }

    std::vector<std::size_t> seeds;
    VertexSet f = g.alive();
    for (;;) {
        check_cancel(opts);
        seeds.clear();
        for (VertexId v : f) {
            for (std::size_t c = 0; c < eg.memory_count(); ++c) {
                if (good[c]) seeds.push_back(eg.node(v, c));
            }
        }
        const auto in_attr =
            detail::positive_attractor_states(eg, i, seeds, [](std::size_t) { return false; }, opts);

        VertexSet nf = f;
        for (VertexId v : f) {
            if (!in_attr[eg.node(v, eg.own_code(v))]) nf.erase(v);
        }
        if (nf == f) return f;
        f = std::move(nf);
    }
}

VertexSet
good_ep(const Subgame& g, const PriorityProfile& profile, Player i, const SolveOptions& opts)
{
    return good_ep_explicit(g, profile, i, std::numeric_limits<std::size_t>::max(), opts);
}

SolveResult
good_ep_solver(const Subgame& g, const PriorityProfile& profile, GoodEpMode mode, const SolveOptions& opts)
{
    SolveResult res = SolveResult::none(g);
    Subgame cur = g;
    for (bool found = true; found && !cur.empty();) {
        found = false;
        for (Player i : {Player::P0, Player::P1}) {
            VertexSet w = i == Player::P0 && mode == GoodEpMode::Antichain ? antichain_good_ep0(cur, profile, opts)
                                                                          : good_ep(cur, profile, i, opts);
            if (w.empty()) continue;
            VertexSet x = attractor(cur, i, w);
            res.winning(i) |= x;
            cur = cur.without(x);
            found = true;
            break;
        }
    }
    res.unsolved = cur.alive();
    return res;
}

VertexSet
gen_good_ep0_explicit(const Subgame& g, const PriorityProfile& profile, std::size_t budget, const SolveOptions& opts)
{
    return good_ep_explicit(g, profile, Player::P0, budget, opts);
}

SolveResult
gen_good_ep_solver(const Subgame& g, const PriorityProfile& profile, GoodEpMode mode, const SolveOptions& opts)
{
    std::vector<PriorityProfile> single;
    for (std::size_t l = 0; l < profile.dimensions(); ++l) single.push_back(profile.project(l));

    SolveResult res = SolveResult::none(g);
    Subgame cur = g;
    auto take = [&](Player i, const VertexSet& w) {
        VertexSet x = attractor(cur, i, w);
        res.winning(i) |= x;
        cur = cur.without(x);
    };
    for (bool found = true; found && !cur.empty();) {
        found = false;
        for (const auto& alpha : single) {
            VertexSet w = good_ep(cur, alpha, Player::P1, opts);
            if (w.empty()) continue;
            take(Player::P1, w);
            found = true;
            break;
        }
        if (found) continue;
        VertexSet w = mode == GoodEpMode::Explicit ? gen_good_ep0_explicit(cur, profile, kDefaultProductBudget, opts)
                                                   : antichain_good_ep0(cur, profile, opts);
        if (w.empty()) continue;
        take(Player::P0, w);
        found = true;
    }
    res.unsolved = cur.alive();
    return res;
}

} // namespace pgpart
