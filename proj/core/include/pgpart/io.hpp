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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgpart/arena.hpp"
#include "pgpart/solve_result.hpp"

namespace pgpart {

enum class GameKind { Parity, Generalized };

/// A parsed game file. Subgames keep a pointer to `arena`, so do not move a
/// Game while views into it are alive.
struct Game
{
    GameKind kind = GameKind::Parity;
    GameArena arena;
    PriorityProfile profile;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/*
 * PGSolver-style text:
 *
 *   parity <max-id> ;
 *   <id> <priority> <owner> <succ>(,<succ>)* ["name"] ;
 *
 * and the generalized variant
 *
 *   generalized-parity <max-id> <k> ;
 *   <id> <p1>(,<pl>)* <owner> <succ>(,<succ>)* ["name"] ;
 *
 * Lines starting with '#' are comments. An optional PGSolver `start <id>;`
 * line after the header is accepted and ignored.
 */
Game parse_parity(std::string_view text);
Game parse_generalized(std::string_view text);
/// Dispatches on the header keyword.
Game parse_game(std::string_view text);
/// Reads a file of either grammar. `kind` overrides the header: a parity file
/// may be treated as generalized (k = 1), and a k = 1 generalized file as parity.
Game load_game(const std::filesystem::path& path, std::optional<GameKind> kind = std::nullopt);

/// Inverse of the parsers. A Parity game must have k = 1.
std::string serialize(const Game& game);

/// "REGION 0: ...\nREGION 1: ...\n" plus "UNSOLVED: ...\n" when requested.
std::string format_regions(const SolveResult& result, bool with_unsolved);

struct RegionReport
{
    std::vector<VertexId> win0;
    std::vector<VertexId> win1;
    std::optional<std::vector<VertexId>> unsolved;
};

/// Reads the format written by format_regions. Throws ParseError.
RegionReport parse_regions(std::string_view text);

} // namespace pgpart
