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

#include "pgpart/extended_game.hpp"

#include <algorithm>
#include <string>

namespace pgpart {

ExtendedGame::ExtendedGame(const Subgame& g, const PriorityProfile& profile, std::size_t budget)
    : g_(&g), profile_(&profile), bounds_(profile.dimensions(), 0), stride_(profile.dimensions(), 1)
{
    for (VertexId v : g.alive()) {
        for (std::size_t l = 0; l < bounds_.size(); ++l) bounds_[l] = std::max(bounds_[l], profile.priority(v, l));
    }
    ids_ = g.alive().to_vector();
    const double states = [&] {
        double s = static_cast<double>(ids_.size());
        for (Priority d : bounds_) s *= static_cast<double>(d) + 1;
        return s;
    }();
    if (states > static_cast<double>(budget))
        throw BudgetExceeded("extended game has " + std::to_string(static_cast<unsigned long long>(states)) +
                             " states, budget is " + std::to_string(budget));

    for (std::size_t l = 0; l < bounds_.size(); ++l) {
        stride_[l] = memory_count_;
        memory_count_ *= bounds_[l] + 1;
    }
    local_.assign(g.universe(), 0);
    for (std::size_t j = 0; j < ids_.size(); ++j) local_[ids_[j]] = static_cast<std::uint32_t>(j);
}

std::size_t
ExtendedGame::encode(const Memory& m) const
{
    std::size_t c = 0;
    for (std::size_t l = 0; l < bounds_.size(); ++l) c += m[l] * stride_[l];
    return c;
}

Memory
ExtendedGame::decode(std::size_t code) const
{
    Memory m(bounds_.size());
    for (std::size_t l = 0; l < bounds_.size(); ++l) m[l] = component(code, l);
    return m;
}

std::size_t
ExtendedGame::own_code(VertexId v) const
{
    std::size_t c = 0;
    for (std::size_t l = 0; l < bounds_.size(); ++l) c += profile_->priority(v, l) * stride_[l];
    return c;
}

std::size_t
ExtendedGame::update(VertexId v, std::size_t code) const
{
    std::size_t c = 0;
    for (std::size_t l = 0; l < bounds_.size(); ++l)
        c += std::max(component(code, l), profile_->priority(v, l)) * stride_[l];
    return c;
}

} // namespace pgpart
