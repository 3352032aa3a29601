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

#include "pgpart/solvers.hpp"

#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "pgpart/psolve_buchi.hpp"
#include "pgpart/psolve_goodep.hpp"
#include "pgpart/psolve_layered.hpp"
#include "pgpart/recursive.hpp"

namespace pgpart {

namespace {

constexpr std::string_view kGen = "gen-";

bool
generalized(std::string_view& name, GameKind kind)
{
    if (name.starts_with(kGen)) {
        name.remove_prefix(kGen.size());
        return true;
    }
    return kind == GameKind::Generalized;
}

SolverFn
partial_fn(std::string_view name, bool gen)
{
    if (name == "buchi") return gen ? SolverFn(gen_buchi_solver) : SolverFn(buchi_solver);
    if (name == "goodep" || name == "goodep-antichain") {
        const GoodEpMode mode = name == "goodep" ? GoodEpMode::Explicit : GoodEpMode::Antichain;
        if (gen) {
            return [mode](const Subgame& g, const PriorityProfile& p, const SolveOptions& o) {
                return gen_good_ep_solver(g, p, mode, o);
            };
        }
        return [mode](const Subgame& g, const PriorityProfile& p, const SolveOptions& o) {
            return good_ep_solver(g, p, mode, o);
        };
    }
    if (name == "lay") return gen ? SolverFn(gen_lay_solver) : SolverFn(lay_solver);
    throw std::invalid_argument("unknown partial solver: " + std::string(name));
}

} // namespace

std::vector<std::string>
partial_solver_names()
{
    return {"buchi", "goodep", "goodep-antichain", "lay"};
}

std::vector<std::string>
complete_solver_names()
{
    return {"zielonka", "ziel-buchi", "ziel-goodep", "ziel-goodep-antichain", "ziel-lay"};
}

std::string
qualified_name(std::string_view name, GameKind kind)
{
    const bool gen = generalized(name, kind);
    return (gen ? std::string(kGen) : std::string()) + std::string(name);
}

PartialSolver
partial_solver(std::string_view name, GameKind kind)
{
    const std::string full = qualified_name(name, kind);
    const bool gen = generalized(name, kind);
    return {full, partial_fn(name, gen)};
}

SolverFn
complete_solver(std::string_view name, GameKind kind)
{
    const bool gen = generalized(name, kind);
    if (name == "zielonka") return gen ? SolverFn(gen_zielonka) : SolverFn(zielonka);
    if (!name.starts_with("ziel-"))
        throw std::invalid_argument("unknown solver: " + std::string(name));
    std::string_view inner = name.substr(5);
    PartialSolver ps{(gen ? std::string(kGen) : std::string()) + std::string(inner), partial_fn(inner, gen)};
    if (gen) {
        return [ps](const Subgame& g, const PriorityProfile& p, const SolveOptions& o) {
            return gen_ziel_with_psolver(g, p, ps, o);
        };
    }
    return [ps](const Subgame& g, const PriorityProfile& p, const SolveOptions& o) {
        return ziel_with_psolver(g, p, ps, o);
    };
}

SolveResult
solve_with_timeout(const SolverFn& fn, const Subgame& g, const PriorityProfile& profile,
                   std::chrono::milliseconds timeout, SolveOptions opts)
{
    std::stop_source stop;
    std::stop_callback forward(opts.stop, [&] { stop.request_stop(); });
    opts.stop = stop.get_token();

    std::mutex mu;
    std::condition_variable_any cv;
    std::jthread watchdog([&](std::stop_token finished) {
        std::unique_lock lock(mu);
        cv.wait_for(lock, finished, timeout, [] { return false; });
        if (!finished.stop_requested()) stop.request_stop();
    });
    return fn(g, profile, opts);
}

PortfolioResult
solve_portfolio(const Subgame& g, const PriorityProfile& profile, GameKind kind, std::chrono::milliseconds timeout,
                const SolveOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    std::stop_source stop;
    std::stop_callback forward(opts.stop, [&] { stop.request_stop(); });

    std::mutex mu;
    std::condition_variable done;
    std::optional<PortfolioResult> winner;
    std::exception_ptr first_error;
    std::size_t finished = 0;
    const auto names = complete_solver_names();

    {
        std::vector<std::jthread> workers;
        for (const auto& name : names) {
            workers.emplace_back([&, name] {
                SolveOptions local = opts;
                local.stop = stop.get_token();
                try {
                    SolveResult r = complete_solver(name, kind)(g, profile, local);
                    std::lock_guard lock(mu);
                    if (!winner) {
                        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start);
                        winner = PortfolioResult{qualified_name(name, kind), std::move(r), elapsed};
                        stop.request_stop();
                    }
                } catch (const Cancelled&) {
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!first_error) first_error = std::current_exception();
                }
                std::lock_guard lock(mu);
                ++finished;
                done.notify_all();
            });
        }

        std::unique_lock lock(mu);
        done.wait_until(lock, start + timeout, [&] { return winner || finished == names.size(); });
        lock.unlock();
        stop.request_stop();
    } // joins

    if (winner) return std::move(*winner);
    if (finished == names.size() && first_error) std::rethrow_exception(first_error);
    throw Cancelled();
}

} // namespace pgpart
