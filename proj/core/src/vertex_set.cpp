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

#include "pgpart/vertex_set.hpp"

#include <cassert>
#include <ostream>

namespace pgpart {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> ids) : VertexSet(universe)
{
    for (VertexId v : ids) insert(v);
}

VertexSet
VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty()) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

VertexSet
VertexSet::from_ids(std::size_t universe, const std::vector<VertexId>& ids)
{
    VertexSet s(universe);
    for (VertexId v : ids) s.insert(v);
    return s;
}

void
VertexSet::clear()
{
    for (auto& w : words_) w = 0;
}

bool
VertexSet::empty() const
{
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t
VertexSet::count() const
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool
VertexSet::is_subset_of(const VertexSet& other) const
{
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool
VertexSet::intersects(const VertexSet& other) const
{
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

VertexSet&
VertexSet::operator|=(const VertexSet& other)
{
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet&
VertexSet::operator&=(const VertexSet& other)
{
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet&
VertexSet::operator-=(const VertexSet& other)
{
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<VertexId>
VertexSet::to_vector() const
{
    std::vector<VertexId> out;
    out.reserve(count());
    for (VertexId v : *this) out.push_back(v);
    return out;
}

std::ostream&
operator<<(std::ostream& os, const VertexSet& set)
{
    os << '{';
    bool first = true;
    for (VertexId v : set) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

} // namespace pgpart
