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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgpart/arena.hpp"
#include "pgpart/solve_result.hpp"

namespace pgpart {

/**
 * An element of the list L scanned by gen_buchi_solver: either an odd
 * priority of one dimension (a player-1 attempt) or a vector of even
 * priorities, one per dimension (a player-0 attempt).
 */
struct PriorityElement
{
    enum class Kind : std::uint8_t { OddAt, EvenVector };

    Kind kind = Kind::EvenVector;
    /// OddAt: a single entry. EvenVector: one entry per dimension.
    std::vector<Priority> priorities;
    /// OddAt only, 0-based.
    std::size_t dim = 0;

    static PriorityElement odd_at(Priority p, std::size_t dim) { return {Kind::OddAt, {p}, dim}; }
    static PriorityElement even_vector(std::vector<Priority> ps) { return {Kind::EvenVector, std::move(ps), 0}; }

    friend bool operator==(const PriorityElement&, const PriorityElement&) = default;
};

/// "OddAt(3,1)" / "EvenVector(2,0)"; dimensions printed 1-based.
std::string to_string(const PriorityElement& e);

/**
 * Lazy enumeration of L: every OddAt(p, l) ordered by p descending then l
 * ascending, followed by every EvenVector in lexicographically descending
 * order. Vectors are produced one at a time, so a scan that stops early
 * never materializes the whole product.
 */
class ElementList
{
public:
    explicit ElementList(std::vector<Priority> maxima);

    /// Restart from the first element.
    void reset();
    std::optional<PriorityElement> next();

private:
    std::vector<Priority> maxima_;
    std::vector<PriorityElement> odd_;
    std::size_t odd_pos_ = 0;
    std::vector<Priority> even_;
    bool even_done_ = false;
};

/// The full list, for inspection and tests.
std::vector<PriorityElement> build_list_L(const PriorityProfile& profile);

/**
 * Buchi-based partial solver for parity games (k = 1). Priorities are
 * scanned from high to low; for p of parity i the solver computes
 * W' = Win(i, Buchi(alpha = p) and Safe(opposite priorities > p)) and
 * W = Attr_i(W'), then restarts on G \ W after the first non-empty W.
 */
SolveResult buchi_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {});

/// Generalized variant scanning L; player 0 uses generalized Buchi.
SolveResult gen_buchi_solver(const Subgame& g, const PriorityProfile& profile, const SolveOptions& opts = {});

} // namespace pgpart
