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

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pgpart/arena.hpp"
#include "pgpart/io.hpp"
#include "pgpart/solve_result.hpp"

// Name-based access to the solvers, shared by the command line tool, the
// benchmarks and the tests.

namespace pgpart {

using SolverFn = std::function<SolveResult(const Subgame&, const PriorityProfile&, const SolveOptions&)>;

/// buchi, goodep, goodep-antichain, lay
std::vector<std::string> partial_solver_names();
/// zielonka, ziel-buchi, ziel-goodep, ziel-goodep-antichain, ziel-lay
std::vector<std::string> complete_solver_names();

/**
 * The partial solver `name` for games of `kind`; the generalized variant is
 * used for generalized games or when the name carries a "gen-" prefix.
 * Throws std::invalid_argument for an unknown name.
 */
PartialSolver partial_solver(std::string_view name, GameKind kind);

/// Complete solver, same naming rules ("gen-zielonka" is the generalized recursion).
SolverFn complete_solver(std::string_view name, GameKind kind);

/// Name as reported, with the "gen-" prefix for generalized variants.
std::string qualified_name(std::string_view name, GameKind kind);

/// Runs fn in the calling thread and cancels it after `timeout` (throws Cancelled).
SolveResult solve_with_timeout(const SolverFn& fn, const Subgame& g, const PriorityProfile& profile,
                               std::chrono::milliseconds timeout, SolveOptions opts = {});

struct PortfolioResult
{
    std::string winner;
    SolveResult result;
    std::chrono::milliseconds elapsed{0};
};

/**
 * Runs every complete solver in its own thread and returns the first result.
 * The others are cancelled and joined before returning. Throws Cancelled if
 * nothing finishes within `timeout` or opts.stop fires; rethrows the first
 * error if every solver fails.
 */
PortfolioResult solve_portfolio(const Subgame& g, const PriorityProfile& profile, GameKind kind,
                                std::chrono::milliseconds timeout, const SolveOptions& opts = {});

} // namespace pgpart
