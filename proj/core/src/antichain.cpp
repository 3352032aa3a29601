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

#include "pgpart/antichain.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgpart {

namespace {

// Keeps `list` the sorted set of maximal elements.
bool
insert_max(std::vector<Memory>& list, const Memory& m)
{
    for (const auto& x : list) {
        if (MemoryOrder::leq(m, x)) return false;
    }
    std::erase_if(list, [&](const Memory& x) { return MemoryOrder::leq(x, m); });
    list.insert(std::upper_bound(list.begin(), list.end(), m), m);
    return true;
}

std::vector<Memory>
meet_lists(const std::vector<Memory>& a, const std::vector<Memory>& b)
{
    std::vector<Memory> out;
    for (const auto& x : a) {
        for (const auto& y : b) insert_max(out, MemoryOrder::meet(x, y));
    }
    return out;
}

std::vector<Priority>
priorities_of(const PriorityProfile& profile, VertexId v)
{
    std::vector<Priority> p(profile.dimensions());
    for (std::size_t l = 0; l < p.size(); ++l) p[l] = profile.priority(v, l);
    return p;
}

} // namespace

bool
MemoryOrder::leq(Priority a, Priority b)
{
    if (a == b) return true;
    const bool ea = is_even(a);
    const bool eb = is_even(b);
    if (ea && eb) return a > b;
    if (!ea && !eb) return a < b;
    return ea;
}

bool
MemoryOrder::leq(const Memory& a, const Memory& b)
{
    for (std::size_t l = 0; l < a.size(); ++l) {
        if (!leq(a[l], b[l])) return false;
    }
    return true;
}

bool
MemoryOrder::leq(const ExtendedVertex& x, const ExtendedVertex& y)
{
    return x.v == y.v && leq(x.m, y.m);
}

Priority
MemoryOrder::meet(Priority a, Priority b)
{
    const bool ea = is_even(a);
    const bool eb = is_even(b);
    if (ea && eb) return std::max(a, b);
    if (!ea && !eb) return std::min(a, b);
    return ea ? a : b;
}

Memory
MemoryOrder::meet(const Memory& a, const Memory& b)
{
    Memory out(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) out[l] = meet(a[l], b[l]);
    return out;
}

ExtendedVertex
MemoryOrder::meet(const ExtendedVertex& x, const ExtendedVertex& y)
{
    if (x.v != y.v) throw std::invalid_argument("meet of memories at different vertices");
    return {x.v, meet(x.m, y.m)};
}

Memory
MemoryOrder::up(const Memory& m, const std::vector<Priority>& p)
{
    Memory out(m.size());
    for (std::size_t l = 0; l < m.size(); ++l) out[l] = up(m[l], p[l]);
    return out;
}

std::optional<Priority>
MemoryOrder::down(Priority mp, Priority p, Priority d)
{
    if (is_even(p)) {
        if (p < mp) return mp;
        return p == 0 ? 0 : p - 1;
    }
    if (p <= mp) return mp;
    if (p == d) return std::nullopt;
    return p + 1;
}

std::optional<Memory>
MemoryOrder::down(const Memory& mp, const std::vector<Priority>& p) const
{
    Memory out(mp.size());
    for (std::size_t l = 0; l < mp.size(); ++l) {
        auto m = down(mp[l], p[l], maxima_[l]);
        if (!m) return std::nullopt;
        out[l] = *m;
    }
    return out;
}

bool
Antichain::empty() const
{
    return std::all_of(at_.begin(), at_.end(), [](const auto& l) { return l.empty(); });
}

std::size_t
Antichain::size() const
{
    std::size_t s = 0;
    for (const auto& l : at_) s += l.size();
    return s;
}

bool
Antichain::insert(VertexId v, const Memory& m)
{
    return insert_max(at_[v], m);
}

bool
Antichain::member(VertexId v, const Memory& m) const
{
    if (v >= at_.size()) return false;
    return std::any_of(at_[v].begin(), at_[v].end(), [&](const Memory& x) { return MemoryOrder::leq(m, x); });
}

std::vector<ExtendedVertex>
Antichain::elements() const
{
    std::vector<ExtendedVertex> out;
    for (std::size_t v = 0; v < at_.size(); ++v) {
        for (const auto& m : at_[v]) out.push_back({static_cast<VertexId>(v), m});
    }
    return out;
}

Antichain&
Antichain::operator|=(const Antichain& other)
{
    if (at_.size() < other.at_.size()) at_.resize(other.at_.size());
    for (std::size_t v = 0; v < other.at_.size(); ++v) {
        for (const auto& m : other.at_[v]) insert_max(at_[v], m);
    }
    return *this;
}

Antichain
antichain_insert(Antichain a, const ExtendedVertex& x)
{
    if (x.v >= a.universe()) {
        Antichain grown(x.v + 1);
        grown |= a;
        a = std::move(grown);
    }
    a.insert(x);
    return a;
}

Antichain
antichain_meet(const Antichain& a, const Antichain& b)
{
    const std::size_t n = std::min(a.universe(), b.universe());
    Antichain out(std::max(a.universe(), b.universe()));
    for (VertexId v = 0; v < n; ++v) {
        for (const auto& m : meet_lists(a.at(v), b.at(v))) out.insert(v, m);
    }
    return out;
}

Antichain
antichain_cpre0(const Subgame& g, const PriorityProfile& profile, const MemoryOrder& order, const Antichain& a)
{
    Antichain out(g.universe());
    auto downs = [&](VertexId w, const std::vector<Priority>& p) {
        std::vector<Memory> list;
        if (w >= a.universe()) return list;
        for (const auto& mp : a.at(w)) {
            if (auto m = order.down(mp, p)) insert_max(list, *m);
        }
        return list;
    };

    for (VertexId v : g.alive()) {
        const auto p = priorities_of(profile, v);
        if (g.owner(v) == Player::P0) {
            g.for_each_successor(v, [&](VertexId w) {
                for (const auto& m : downs(w, p)) out.insert(v, m);
            });
            continue;
        }
        std::vector<Memory> acc;
        bool first = true;
        bool dead = false;
        g.for_each_successor(v, [&](VertexId w) {
            if (dead) return;
            auto factor = downs(w, p);
            acc = first ? std::move(factor) : meet_lists(acc, factor);
            first = false;
            dead = acc.empty();
        });
        if (dead) continue;
        for (const auto& m : acc) out.insert(v, m);
    }
    return out;
}

VertexSet
antichain_good_ep0(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts)
{
    const std::size_t k = profile.dimensions();
    std::vector<Priority> maxima(k, 0);
    for (VertexId v : g.alive()) {
        for (std::size_t l = 0; l < k; ++l) maxima[l] = std::max(maxima[l], profile.priority(v, l));
    }
    const MemoryOrder order(std::move(maxima));
    const Memory zero(k, 0);

    VertexSet f = g.alive();
    for (;;) {
        check_cancel(opts);
        // all-even memories at the vertices of F
        Antichain t(g.universe());
        for (VertexId v : f) t.insert(v, zero);

        Antichain x = antichain_cpre0(g, profile, order, t);
        for (;;) {
            check_cancel(opts);
            Antichain next = x | antichain_cpre0(g, profile, order, x | t);
            if (next == x) break;
            x = std::move(next);
        }

        VertexSet nf = f;
        for (VertexId v : f) {
            if (!x.member(v, priorities_of(profile, v))) nf.erase(v);
        }
        if (nf == f) return f;
        f = std::move(nf);
    }
}

} // namespace pgpart
