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

#include "pgpart/recursive.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pgpart/attractor.hpp"

namespace pgpart {

namespace {

struct Regions
{
    VertexSet w0;
    VertexSet w1;

    VertexSet& of(Player p) { return p == Player::P0 ? w0 : w1; }
};

/*
 * Recursion is unrolled onto an explicit stack so deep games do not exhaust
 * the native stack. Every push strictly shrinks the alive set, hence the
 * depth bound checked below.
 */
struct Frame
{
    explicit Frame(Subgame g) : bar(std::move(g)) {}

    Subgame bar;
    VertexSet z0, z1;
    VertexSet x;
    Player sigma = Player::P0;
    std::size_t dim = 0;
    int stage = 0;

    VertexSet& z(Player p) { return p == Player::P0 ? z0 : z1; }
};

void
check_depth(std::size_t depth, const Subgame& root, const PriorityProfile& profile)
{
    if (depth > root.universe() + profile.dimensions() + 2)
        throw std::logic_error("recursion depth exceeds |V| + k; the arena is inconsistent");
}

// Runs the partial solver on f.bar and narrows f.bar to what it left over.
void
apply_partial(Frame& f, const PriorityProfile& profile, const PartialSolver* ps, const SolveOptions& opts)
{
    const std::size_t n = f.bar.universe();
    if (!ps) {
        f.z0 = VertexSet(n);
        f.z1 = VertexSet(n);
        return;
    }
    SolveResult r = ps->run(f.bar, profile, opts);
    if (opts.audit) {
        if (auto err = audit_partial_result(f.bar, r)) throw ContractViolation(ps->name + ": " + *err);
    }
    f.z0 = std::move(r.win0);
    f.z1 = std::move(r.win1);
    f.bar = Subgame(f.bar.arena(), std::move(r.unsolved));
}

SolveResult
finish(const Subgame& g, Regions r)
{
    SolveResult out;
    out.win0 = std::move(r.w0);
    out.win1 = std::move(r.w1);
    out.unsolved = VertexSet(g.universe());
    return out;
}

SolveResult
run_parity(const Subgame& g, const PriorityProfile& profile, const PartialSolver* ps, const SolveOptions& opts)
{
    const std::size_t n = g.universe();
    std::vector<Frame> stack;
    stack.emplace_back(g);
    Regions ret{VertexSet(n), VertexSet(n)};

    while (!stack.empty()) {
        check_cancel(opts);
        check_depth(stack.size(), g, profile);
        Frame& f = stack.back();

        if (f.stage == 0) {
            if (f.bar.empty()) {
                ret = {VertexSet(n), VertexSet(n)};
                stack.pop_back();
                continue;
            }
            apply_partial(f, profile, ps, opts);
            if (f.bar.empty()) {
                ret = {std::move(f.z0), std::move(f.z1)};
                stack.pop_back();
                continue;
            }
            const Priority p = *max_alive_priority(f.bar, profile);
            f.sigma = parity_of(p);
            VertexSet top = f.bar.select([&](VertexId v) { return profile.priority(v) == p; });
            f.x = attractor(f.bar, f.sigma, top);
            f.stage = 1;
            Subgame child = f.bar.without(f.x);
            stack.emplace_back(std::move(child));
            continue;
        }

        const Player i = f.sigma;
        const Player o = opponent(i);
        if (f.stage == 1) {
            if (ret.of(o).empty()) {
                Regions out{VertexSet(n), VertexSet(n)};
                out.of(i) = f.z(i) | ret.of(i) | f.x;
                out.of(o) = std::move(f.z(o));
                ret = std::move(out);
                stack.pop_back();
                continue;
            }
            f.x = attractor(f.bar, o, ret.of(o));
            f.stage = 2;
            Subgame child = f.bar.without(f.x);
            stack.emplace_back(std::move(child));
            continue;
        }

        Regions out{VertexSet(n), VertexSet(n)};
        out.of(i) = f.z(i) | ret.of(i);
        out.of(o) = f.z(o) | ret.of(o) | f.x;
        ret = std::move(out);
        stack.pop_back();
    }
    return finish(g, std::move(ret));
}

// Vertices stripped while some dimension still has an odd maximum.
VertexSet
strip_odd_tops(const Subgame& g, const PriorityProfile& profile)
{
    VertexSet keep = g.alive();
    const std::size_t k = profile.dimensions();
    for (bool changed = true; changed && !keep.empty();) {
        changed = false;
        for (std::size_t l = 0; l < k && !keep.empty(); ++l) {
            Priority m = 0;
            for (VertexId v : keep) m = std::max(m, profile.priority(v, l));
            if (is_even(m)) continue;
            for (VertexId v : keep.to_vector()) {
                if (profile.priority(v, l) == m) keep.erase(v);
            }
            changed = true;
        }
    }
    return g.alive() - keep;
}

// Pushes the next child of a player-0 node, starting at dimension f.dim.
void
push_even_child(std::vector<Frame>& stack, const PriorityProfile& profile, const std::vector<Priority>& maxima)
{
    Frame& f = stack.back();
    const std::size_t l = f.dim;
    VertexSet top = f.bar.select([&](VertexId v) { return profile.priority(v, l) == maxima[l]; });
    f.x = attractor(f.bar, Player::P0, top);
    f.stage = 1;
    Subgame child = f.bar.without(f.x);
    stack.emplace_back(std::move(child));
}

std::vector<Priority>
alive_maxima(const Subgame& g, const PriorityProfile& profile)
{
    std::vector<Priority> m(profile.dimensions(), 0);
    for (VertexId v : g.alive()) {
        for (std::size_t l = 0; l < m.size(); ++l) m[l] = std::max(m[l], profile.priority(v, l));
    }
    return m;
}

SolveResult
run_generalized(const Subgame& g, const PriorityProfile& profile, const PartialSolver* ps, const SolveOptions& opts)
{
    const std::size_t n = g.universe();
    const std::size_t k = profile.dimensions();
    std::vector<Frame> stack;
    stack.emplace_back(g);
    Regions ret{VertexSet(n), VertexSet(n)};

    while (!stack.empty()) {
        check_cancel(opts);
        check_depth(stack.size(), g, profile);
        Frame& f = stack.back();

        if (f.stage == 0) {
            if (f.bar.empty()) {
                ret = {VertexSet(n), VertexSet(n)};
                stack.pop_back();
                continue;
            }
            apply_partial(f, profile, ps, opts);
            if (f.bar.empty()) {
                ret = {std::move(f.z0), std::move(f.z1)};
                stack.pop_back();
                continue;
            }
            std::vector<Priority> maxima = alive_maxima(f.bar, profile);
            bool all_even = true;
            for (Priority m : maxima) all_even = all_even && is_even(m);
            if (all_even) {
                f.sigma = Player::P0;
                f.dim = 0;
                push_even_child(stack, profile, maxima);
            } else {
                f.sigma = Player::P1;
                f.x = attractor(f.bar, Player::P1, strip_odd_tops(f.bar, profile));
                f.stage = 1;
                Subgame child = f.bar.without(f.x);
                stack.emplace_back(std::move(child));
            }
            continue;
        }

        const Player i = f.sigma;
        const Player o = opponent(i);
        if (f.stage == 1) {
            if (!ret.of(o).empty()) {
                f.x = attractor(f.bar, o, ret.of(o));
                f.stage = 2;
                Subgame child = f.bar.without(f.x);
                stack.emplace_back(std::move(child));
                continue;
            }
            if (i == Player::P0 && f.dim + 1 < k) {
                ++f.dim;
                push_even_child(stack, profile, alive_maxima(f.bar, profile));
                continue;
            }
            Regions out{VertexSet(n), VertexSet(n)};
            out.of(i) = f.z(i) | f.bar.alive();
            out.of(o) = std::move(f.z(o));
            ret = std::move(out);
            stack.pop_back();
            continue;
        }

        Regions out{VertexSet(n), VertexSet(n)};
        out.of(i) = f.z(i) | ret.of(i);
        out.of(o) = f.z(o) | ret.of(o) | f.x;
        ret = std::move(out);
        stack.pop_back();
    }
    return finish(g, std::move(ret));
}

} // namespace

SolveResult
zielonka(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts)
{
    return run_parity(g, profile, nullptr, opts);
}

SolveResult
ziel_with_psolver(const Subgame& g, const PriorityProfile& profile, const PartialSolver& ps, const SolveOptions& opts)
{
    return run_parity(g, profile, &ps, opts);
}

SolveResult
gen_zielonka(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts)
{
    return run_generalized(g, profile, nullptr, opts);
}

SolveResult
gen_ziel_with_psolver(const Subgame& g, const PriorityProfile& profile, const PartialSolver& ps,
                      const SolveOptions& opts)
{
    return run_generalized(g, profile, &ps, opts);
}

} // namespace pgpart
