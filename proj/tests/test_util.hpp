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

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>

#include "pgpart/io.hpp"
#include "pgpart/oracle.hpp"

namespace pgpart::testing {

inline std::filesystem::path
fixture(const std::string& name)
{
    return std::filesystem::path(PGPART_FIXTURE_DIR) / name;
}

inline Game
load_fixture(const std::string& name)
{
    return load_game(fixture(name));
}

inline VertexSet
set_of(std::size_t n, std::initializer_list<VertexId> ids)
{
    return VertexSet(n, ids);
}

// Corpora shared by the unit tests and the acceptance run. Game i of a corpus
// is fully determined by i.

inline Game
parity_game(std::uint64_t i)
{
    return random_game({1 + i % 8, 3, {static_cast<Priority>(i % 5)}, i});
}

inline Game
generalized_game(std::uint64_t i)
{
    const std::size_t k = 1 + i % 3;
    std::vector<Priority> d(k);
    for (std::size_t l = 0; l < k; ++l) d[l] = static_cast<Priority>((i / 3 + l) % 4);
    return random_game({1 + i % 6, 3, d, 100000 + i});
}

inline Game
antichain_game(std::uint64_t i)
{
    const std::size_t k = 1 + i % 3;
    std::vector<Priority> d(k);
    for (std::size_t l = 0; l < k; ++l) d[l] = static_cast<Priority>((i / 3 + 2 * l) % 5);
    return random_game({1 + i % 12, 3, d, 200000 + i});
}

} // namespace pgpart::testing
