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

#include "pgpart/psolve_layered.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pgpart/attractor.hpp"
#include "product_attractor.hpp"

namespace pgpart {

namespace {

// Largest priority of `dim` with player i's parity.
std::optional<Priority>
top_of(const PriorityProfile& profile, std::size_t dim, Player i)
{
    const Priority d = profile.max_priority(dim);
    if (parity_of(d) == i) return d;
    if (d == 0) return std::nullopt;
    return d - 1;
}

} // namespace

std::string
to_string(const LayerSpec& s)
{
    std::ostringstream out;
    out << "P" << index(s.player) << "(q=";
    if (s.kind == LayerSpec::Kind::Vector) out << "(";
    for (std::size_t l = 0; l < s.q.size(); ++l) out << (l ? "," : "") << s.q[l];
    if (s.kind == LayerSpec::Kind::Vector) out << ")";
    else out << ", dim=" << s.dim + 1;
    out << ")";
    return out.str();
}

std::vector<std::vector<Priority>>
ladder(const LayerSpec& spec, const PriorityProfile& profile)
{
    std::vector<std::vector<Priority>> rungs;
    if (spec.kind == LayerSpec::Kind::Scalar) {
        auto top = top_of(profile, spec.dim, spec.player);
        const Priority q = spec.q.front();
        if (!top || *top < q) return rungs;
        for (Priority p = *top;; p -= 2) {
            rungs.push_back({p});
            if (p < q + 2) break;
        }
        return rungs;
    }
    std::vector<Priority> p(spec.q.size());
    for (std::size_t l = 0; l < p.size(); ++l) p[l] = std::max(*top_of(profile, l, Player::P0), spec.q[l]);
    rungs.push_back(p);
    while (p != spec.q) {
        for (std::size_t l = 0; l < p.size(); ++l) p[l] = std::max(p[l] >= 2 ? p[l] - 2 : 0, spec.q[l]);
        rungs.push_back(p);
    }
    return rungs;
}

std::vector<LayerSpec>
build_list_P(const PriorityProfile& profile, bool generalized)
{
    std::vector<LayerSpec> out;
    if (!generalized) {
        long a = static_cast<long>(*top_of(profile, 0, Player::P0));
        auto t1 = top_of(profile, 0, Player::P1);
        long b = t1 ? static_cast<long>(*t1) : -1;
        for (; a >= 0 || b >= 1; a -= 2, b -= 2) {
            if (a >= 0) out.push_back(LayerSpec::scalar(Player::P0, static_cast<Priority>(a)));
            if (b >= 1) out.push_back(LayerSpec::scalar(Player::P1, static_cast<Priority>(b)));
        }
        return out;
    }

    const std::size_t k = profile.dimensions();
    std::vector<std::tuple<Priority, std::size_t, Priority>> odd; // (length, dim, q)
    for (std::size_t l = 0; l < k; ++l) {
        auto t = top_of(profile, l, Player::P1);
        if (!t) continue;
        for (Priority q = *t;; q -= 2) {
            odd.emplace_back((*t - q) / 2 + 1, l, q);
            if (q < 3) break;
        }
    }
    std::sort(odd.begin(), odd.end());
    for (const auto& [len, l, q] : odd) out.push_back(LayerSpec::scalar(Player::P1, q, l));

    std::vector<Priority> top(k);
    for (std::size_t l = 0; l < k; ++l) top[l] = *top_of(profile, l, Player::P0);
    std::vector<std::pair<Priority, std::vector<Priority>>> even;
    std::vector<Priority> q = top;
    for (bool more = true; more;) {
        Priority len = 0;
        for (std::size_t l = 0; l < k; ++l) len = std::max(len, (top[l] - q[l]) / 2 + 1);
        even.emplace_back(len, q);
        more = false;
        for (std::size_t l = k; l-- > 0;) {
            if (q[l] >= 2) {
                q[l] -= 2;
                more = true;
                break;
            }
            q[l] = top[l];
        }
    }
    std::stable_sort(even.begin(), even.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [len, v] : even) out.push_back(LayerSpec::vector(std::move(v)));
    return out;
}

VertexSet
layered_attractor(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec, const VertexSet& u)
{
    const Player i = spec.player;
    const std::size_t dim = spec.dim;
    VertexSet b(g.universe());
    for (const auto& rung : ladder(spec, profile)) {
        const Priority p = rung.front();
        VertexSet up = g.select([&](VertexId v) { return u.contains(v) && profile.priority(v, dim) >= p; });
        VertexSet bad = g.select([&](VertexId v) {
            const Priority a = profile.priority(v, dim);
            return a > p && parity_of(a) != i;
        });
        b |= positive_safe_attractor(g, i, up | b, bad - b);
    }
    return b;
}

VertexSet
lay_ep(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec, const SolveOptions& opts)
{
    const std::size_t dim = spec.dim;
    const Priority q = spec.q.front();
    VertexSet f = g.select([&](VertexId v) {
        const Priority a = profile.priority(v, dim);
        return parity_of(a) == spec.player && a >= q;
    });
    while (!f.empty()) {
        check_cancel(opts);
        VertexSet nf = layered_attractor(g, profile, spec, f) & f;
        if (nf == f) break;
        f = std::move(nf);
    }
    return f;
}

namespace {

template <class Ep>
SolveResult
scan_specs(const Subgame& g, const std::vector<LayerSpec>& specs, const SolveOptions& opts, Ep&& ep)
{
    SolveResult res = SolveResult::none(g);
    Subgame cur = g;
    for (bool found = true; found && !cur.empty();) {
        found = false;
        for (const auto& spec : specs) {
            check_cancel(opts);
            VertexSet w = ep(cur, spec);
            if (w.empty()) continue;
            VertexSet x = attractor(cur, spec.player, w);
            res.winning(spec.player) |= x;
            cur = cur.without(x);
            found = true;
            break;
        }
    }
    res.unsolved = cur.alive();
    return res;
}

} // namespace

SolveResult
lay_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts)
{
    return scan_specs(g, build_list_P(profile, false), opts,
                      [&](const Subgame& cur, const LayerSpec& spec) { return lay_ep(cur, profile, spec, opts); });
}

MemoryGame::MemoryGame(const Subgame& g, const PriorityProfile& profile, std::vector<Priority> p)
    : g_(&g), p_(std::move(p)), k_(profile.dimensions())
{
    if (k_ > kMaxDimensions) throw std::invalid_argument("too many dimensions for the memory game");
    full_ = static_cast<Mask>((std::size_t{1} << k_) - 1);
    np_.assign(g.universe(), 0);
    for (VertexId v = 0; v < g.universe(); ++v) {
        for (std::size_t l = 0; l < k_; ++l) {
            const Priority a = profile.priority(v, l);
            if (is_even(a) && a >= p_[l]) np_[v] |= Mask{1} << l;
        }
    }
}

VertexSet
gen_layered_attractor(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec, const VertexSet& u)
{
    const std::size_t k = profile.dimensions();
    VertexSet c(g.universe());
    for (const auto& p : ladder(spec, profile)) {
        const MemoryGame mg(g, profile, p);
        VertexSet bad = g.select([&](VertexId v) {
            for (std::size_t l = 0; l < k; ++l) {
                const Priority a = profile.priority(v, l);
                if (!is_even(a) && a > p[l]) return true;
            }
            return false;
        });
        bad -= c;

        std::vector<std::size_t> seeds;
        for (VertexId v : c) {
            for (MemoryGame::Mask n = 0; n <= mg.full(); ++n) seeds.push_back(mg.node(v, n));
        }
        for (VertexId v : g.alive()) {
            if (u.contains(v) && !c.contains(v) && !bad.contains(v)) seeds.push_back(mg.node(v, mg.full()));
        }
        const auto in_b = detail::positive_attractor_states(
            mg, Player::P0, seeds, [&](std::size_t s) { return bad.contains(mg.vertex(s)); }, SolveOptions{});

        VertexSet layer = g.select([&](VertexId v) { return in_b[mg.node(v, mg.initial(v))] != 0; });
        c |= layer;
    }
    return c;
}

VertexSet
gen_lay_ep(const Subgame& g, const PriorityProfile& profile, const LayerSpec& spec, const SolveOptions& opts)
{
    if (spec.kind == LayerSpec::Kind::Scalar) return lay_ep(g, profile, spec, opts);
    const std::size_t k = profile.dimensions();
    VertexSet f = g.select([&](VertexId v) {
        for (std::size_t l = 0; l < k; ++l) {
            const Priority a = profile.priority(v, l);
            if (!is_even(a) || a < spec.q[l]) return false;
        }
        return true;
    });
    while (!f.empty()) {
        check_cancel(opts);
        VertexSet nf = gen_layered_attractor(g, profile, spec, f) & f;
        if (nf == f) break;
        f = std::move(nf);
    }
    return f;
}

SolveResult
gen_lay_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts)
{
    return scan_specs(g, build_list_P(profile, true), opts,
                      [&](const Subgame& cur, const LayerSpec& spec) { return gen_lay_ep(cur, profile, spec, opts); });
}

} // namespace pgpart
