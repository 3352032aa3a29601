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

#include <functional>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>

#include "pgpart/arena.hpp"

namespace pgpart {

/// Winning (or partially winning) regions of both players plus the rest.
struct SolveResult
{
    VertexSet win0;
    VertexSet win1;
    VertexSet unsolved;

    /// (empty, empty, alive)
    static SolveResult none(const Subgame& g);

    const VertexSet& winning(Player p) const { return p == Player::P0 ? win0 : win1; }
    VertexSet& winning(Player p) { return p == Player::P0 ? win0 : win1; }

    VertexSet solved() const { return win0 | win1; }
    bool complete() const { return unsolved.empty(); }

    friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

#ifdef NDEBUG
inline constexpr bool kAuditDefault = false;
#else
inline constexpr bool kAuditDefault = true;
#endif

struct SolveOptions
{
    /// Checked cooperatively at recursion frames and solver iterations.
    std::stop_token stop;
    /// Check the partial-solver escape condition on every call.
    bool audit = kAuditDefault;
};

class Cancelled : public std::runtime_error
{
public:
    Cancelled() : std::runtime_error("solver cancelled") {}
};

/// A computation would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ContractViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

inline void
check_cancel(const SolveOptions& opts)
{
    if (opts.stop.stop_requested()) throw Cancelled();
}

struct PartialSolver
{
    std::string name;
    std::function<SolveResult(const Subgame&, const PriorityProfile&, const SolveOptions&)> run;
};

/// The partial solver that never solves anything.
PartialSolver trivial_partial_solver();

/**
 * Checks what the recursive solvers rely on from a partial result over g:
 * the three regions partition alive, the unsolved part induces a deadlock-free
 * subgame, and every edge leaving unsolved from a player-i vertex lands in the
 * opponent's region. Returns a diagnostic on the first violation.
 */
std::optional<std::string> audit_partial_result(const Subgame& g, const SolveResult& r);

} // namespace pgpart
