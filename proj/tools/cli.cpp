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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pgpart/io.hpp"
#include "pgpart/oracle.hpp"
#include "pgpart/recursive.hpp"
#include "pgpart/solvers.hpp"

namespace pgpart::cli {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::optional<GameKind>
kind_flag(const std::string& kind)
{
    if (kind.empty()) return std::nullopt;
    if (kind == "parity") return GameKind::Parity;
    return GameKind::Generalized;
}

std::string
read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

VertexSet
to_set(const std::vector<VertexId>& ids, std::size_t n)
{
    VertexSet s(n);
    for (VertexId v : ids) s.insert(v);
    return s;
}

struct Checks
{
    std::ostream& out;
    bool ok = true;

    void pass(const std::string& name) { out << "PASS " << name << "\n"; }
    void fail(const std::string& name, const std::string& why)
    {
        out << "FAIL " << name << ": " << why << "\n";
        ok = false;
    }
    void check(const std::string& name, const std::optional<std::string>& problem)
    {
        if (problem) fail(name, *problem);
        else pass(name);
    }
};

std::optional<std::string>
first_difference(const SolveResult& expected, const SolveResult& got)
{
    for (Player p : {Player::P0, Player::P1}) {
        VertexSet missing = expected.winning(p) - got.winning(p);
        if (!missing.empty())
            return "vertex " + std::to_string(*missing.begin()) + " should be won by player " +
                   std::to_string(index(p));
    }
    if (!(expected == got)) return std::string("regions differ");
    return std::nullopt;
}

int
cmd_solve(const std::string& file, const std::string& algorithm, const std::string& kind, long timeout_ms,
          std::ostream& out, std::ostream& err)
{
    const Game game = load_game(file, kind_flag(kind));
    const Subgame g(game.arena);
    const std::chrono::milliseconds timeout(timeout_ms);
    try {
        if (algorithm == "portfolio") {
            PortfolioResult r = solve_portfolio(g, game.profile, game.kind, timeout);
            out << "WINNER: " << r.winner << " " << r.elapsed.count() << " ms\n";
            out << format_regions(r.result, false);
            return kOk;
        }
        const SolverFn fn = complete_solver(algorithm, game.kind);
        out << format_regions(solve_with_timeout(fn, g, game.profile, timeout), false);
        return kOk;
    } catch (const Cancelled&) {
        err << "timeout after " << timeout_ms << " ms\n";
        return kTimeout;
    }
}

int
cmd_partial(const std::string& file, const std::string& solver, const std::string& kind, long timeout_ms,
            std::ostream& out, std::ostream& err)
{
    const Game game = load_game(file, kind_flag(kind));
    const Subgame g(game.arena);
    const PartialSolver ps = partial_solver(solver, game.kind);
    try {
        out << format_regions(solve_with_timeout(ps.run, g, game.profile, std::chrono::milliseconds(timeout_ms)),
                              true);
        return kOk;
    } catch (const Cancelled&) {
        err << "timeout after " << timeout_ms << " ms\n";
        return kTimeout;
    }
}

int
cmd_verify(const std::string& file, const std::string& against, const std::string& regions, const std::string& kind,
           std::ostream& out)
{
    const Game game = load_game(file, kind_flag(kind));
    const Subgame g(game.arena);
    const std::size_t n = game.arena.vertex_count();
    const SolverFn reference = complete_solver("zielonka", game.kind);

    SolveResult claimed;
    if (regions.empty()) {
        claimed = reference(g, game.profile, {});
    } else {
        const RegionReport report = parse_regions(read_file(regions));
        claimed.win0 = VertexSet(n);
        claimed.win1 = VertexSet(n);
        claimed.unsolved = VertexSet(n);
        for (const auto* ids : {&report.win0, &report.win1}) {
            for (VertexId v : *ids) {
                if (v >= n) {
                    out << "FAIL partition: vertex " << v << " is not in the game\n";
                    out << "FAIL\n";
                    return kCheckFailed;
                }
            }
        }
        claimed.win0 = to_set(report.win0, n);
        claimed.win1 = to_set(report.win1, n);
        if (report.unsolved) claimed.unsolved = to_set(*report.unsolved, n);
    }

    Checks c{out};
    c.check("partition", [&]() -> std::optional<std::string> {
        if (claimed.win0.intersects(claimed.win1)) return "a vertex is claimed by both players";
        if (!(claimed.win0 | claimed.win1 | claimed.unsolved).is_subset_of(g.alive())) return "unknown vertex";
        if ((claimed.win0 | claimed.win1 | claimed.unsolved) != g.alive()) return "some vertex is not covered";
        if (claimed.unsolved.intersects(claimed.solved())) return "unsolved overlaps a region";
        return std::nullopt;
    }());
    if (!c.ok) {
        out << "FAIL\n";
        return kCheckFailed;
    }
    c.check("escape", audit_partial_result(g, claimed));
    c.check("trap", [&]() -> std::optional<std::string> {
        if (!is_trap(g, claimed.win0, Player::P1)) return "player 1 can leave region 0";
        if (!is_trap(g, claimed.win1, Player::P0)) return "player 0 can leave region 1";
        return std::nullopt;
    }());

    auto sound = [&](const SolveResult& truth) -> std::optional<std::string> {
        if (claimed.complete()) return first_difference(truth, claimed);
        for (Player p : {Player::P0, Player::P1}) {
            VertexSet wrong = claimed.winning(p) - truth.winning(p);
            if (!wrong.empty())
                return "vertex " + std::to_string(*wrong.begin()) + " is not won by player " +
                       std::to_string(index(p));
        }
        return std::nullopt;
    };

    if (against == "cross") {
        std::optional<SolveResult> first;
        for (const auto& name : complete_solver_names()) {
            SolveResult r = complete_solver(name, game.kind)(g, game.profile, {});
            if (!first) first = r;
            c.check("cross " + qualified_name(name, game.kind), first_difference(*first, r));
        }
        c.check("claimed", sound(*first));
    } else {
        try {
            const SolveResult truth = game.kind == GameKind::Parity ? brute_parity(g, game.profile)
                                                                    : brute_generalized(g, game.profile);
            c.check("oracle", sound(truth));
        } catch (const BudgetExceeded& e) {
            out << "SKIP oracle: " << e.what() << "\n";
        }
    }
    out << (c.ok ? "PASS\n" : "FAIL\n");
    return c.ok ? kOk : kCheckFailed;
}

int
cmd_generate(std::size_t vertices, std::size_t max_outdeg, const std::vector<Priority>& priorities,
             std::uint64_t seed, std::size_t count, const std::string& out_file, const std::string& dir,
             std::ostream& out)
{
    for (std::size_t j = 0; j < count; ++j) {
        RandomGameParams params{vertices, max_outdeg, priorities, seed + j};
        const std::string text = serialize(random_game(params));
        if (!dir.empty()) {
            fs::create_directories(dir);
            const char* ext = priorities.size() == 1 ? ".gm" : ".gpg";
            std::ofstream(fs::path(dir) / ("game_" + std::to_string(seed + j) + ext)) << text;
        } else if (!out_file.empty() && count == 1) {
            std::ofstream(out_file) << text;
        } else {
            out << text;
        }
    }
    return kOk;
}

int
cmd_bench(const std::string& dir, long timeout_ms, const std::string& csv, std::vector<std::string> algorithms,
          std::ostream& out, std::ostream& err)
{
    if (algorithms.empty()) algorithms = complete_solver_names();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".gm" || ext == ".gpg" || ext == ".pg")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::ofstream csv_file;
    if (!csv.empty()) csv_file.open(csv);
    std::ostream& sink = csv.empty() ? out : csv_file;
    sink << "file,algorithm,vertices,edges,k,time_ms,solved0,solved1,unsolved,timed_out\n";

    for (const auto& path : files) {
        std::optional<Game> game;
        try {
            game.emplace(load_game(path));
        } catch (const std::exception& e) {
            err << path.string() << ": " << e.what() << "\n";
            continue;
        }
        const Subgame g(game->arena);
        for (const auto& name : algorithms) {
            const SolverFn fn = complete_solver(name, game->kind);
            const auto start = Clock::now();
            std::optional<SolveResult> r;
            try {
                r = solve_with_timeout(fn, g, game->profile, std::chrono::milliseconds(timeout_ms));
            } catch (const Cancelled&) {
            }
            const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            sink << path.filename().string() << "," << qualified_name(name, game->kind) << ","
                 << game->arena.vertex_count() << "," << game->arena.edge_count() << ","
                 << game->profile.dimensions() << "," << ms << ",";
            if (r) sink << r->win0.count() << "," << r->win1.count() << "," << r->unsolved.count() << ",0\n";
            else sink << ",,," << "1\n";
        }
    }
    return kOk;
}

} // namespace

int
run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parity and generalized parity game solver"};
    app.require_subcommand(1);

    std::string file, kind, algorithm = "zielonka", solver, against = "oracle", regions;
    long timeout_ms = 60000;
    const auto kinds = CLI::IsMember({"parity", "generalized"});

    auto* solve = app.add_subcommand("solve", "Solve a game completely");
    solve->add_option("file", file, "Game file")->required();
    solve->add_option("--algorithm,-a", algorithm,
                      "zielonka, ziel-buchi, ziel-goodep, ziel-goodep-antichain, ziel-lay or portfolio; "
                      "the generalized variant is used for generalized games");
    solve->add_option("--kind", kind, "Override the file kind")->check(kinds);
    solve->add_option("--timeout-ms", timeout_ms, "Timeout in milliseconds")->capture_default_str();

    auto* partial = app.add_subcommand("partial", "Run a partial solver");
    partial->add_option("file", file, "Game file")->required();
    partial->add_option("--solver,-s", solver, "buchi, goodep, goodep-antichain or lay")->required();
    partial->add_option("--kind", kind, "Override the file kind")->check(kinds);
    partial->add_option("--timeout-ms", timeout_ms, "Timeout in milliseconds")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check winning regions");
    verify->add_option("file", file, "Game file")->required();
    verify->add_option("--against", against, "oracle or cross")->check(CLI::IsMember({"oracle", "cross"}));
    verify->add_option("--regions", regions, "Region file to check (default: computed by zielonka)");
    verify->add_option("--kind", kind, "Override the file kind")->check(kinds);

    std::size_t vertices = 8, max_outdeg = 3, count = 1;
    std::vector<Priority> priorities{4};
    std::uint64_t seed = 0;
    std::string out_file, dir;
    auto* generate = app.add_subcommand("generate", "Write random games");
    generate->add_option("--vertices,-n", vertices)->check(CLI::PositiveNumber);
    generate->add_option("--max-outdeg", max_outdeg)->check(CLI::PositiveNumber);
    generate->add_option("--priorities,-d", priorities, "Maximum priority per dimension")->delimiter(',');
    generate->add_option("--seed", seed);
    generate->add_option("--count", count)->check(CLI::PositiveNumber);
    generate->add_option("--out,-o", out_file, "Output file (single game)");
    generate->add_option("--dir", dir, "Output directory");

    std::string csv;
    std::vector<std::string> algorithms;
    auto* bench = app.add_subcommand("bench", "Time the complete solvers on a directory of games");
    bench->add_option("dir", dir, "Directory of game files")->required()->check(CLI::ExistingDirectory);
    bench->add_option("--timeout-ms", timeout_ms)->capture_default_str();
    bench->add_option("--csv", csv, "CSV output file (default: stdout)");
    bench->add_option("--algorithms", algorithms)->delimiter(',');

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*solve) return cmd_solve(file, algorithm, kind, timeout_ms, out, err);
        if (*partial) return cmd_partial(file, solver, kind, timeout_ms, out, err);
        if (*verify) return cmd_verify(file, against, regions, kind, out);
        if (*generate) return cmd_generate(vertices, max_outdeg, priorities, seed, count, out_file, dir, out);
        return cmd_bench(dir, timeout_ms, csv, algorithms, out, err);
    } catch (const ParseError& e) {
        err << file << ":" << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kInputError;
    }
}

} // namespace pgpart::cli
