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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <vector>

namespace pgpart {

using VertexId = std::uint32_t;

/**
 * Dense bitset over vertex ids [0, universe).
 *
 * All binary operations require both operands to share the same universe.
 */
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> ids);

    static VertexSet full(std::size_t universe);
    static VertexSet from_ids(std::size_t universe, const std::vector<VertexId>& ids);

    std::size_t universe() const { return universe_; }

    bool contains(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear();

    bool empty() const;
    std::size_t count() const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    std::vector<VertexId> to_vector() const;

    class const_iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t word) : set_(set), word_(word) { settle(); }

        VertexId operator*() const { return static_cast<VertexId>(word_ * 64 + std::countr_zero(bits_)); }
        const_iterator& operator++()
        {
            bits_ &= bits_ - 1;
            if (bits_ == 0) {
                ++word_;
                settle();
            }
            return *this;
        }
        const_iterator operator++(int)
        {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b)
        {
            return a.word_ == b.word_ && a.bits_ == b.bits_;
        }

    private:
        void settle()
        {
            const auto& w = set_->words_;
            while (word_ < w.size() && w[word_] == 0) ++word_;
            bits_ = word_ < w.size() ? w[word_] : 0;
        }

        const VertexSet* set_ = nullptr;
        std::size_t word_ = 0;
        std::uint64_t bits_ = 0;
    };

    const_iterator begin() const { return const_iterator(this, 0); }
    const_iterator end() const { return const_iterator(this, words_.size()); }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& set);

} // namespace pgpart
