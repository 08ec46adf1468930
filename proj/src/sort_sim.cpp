// Copyright 2026 The qcirculant developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcirculant/sort_sim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "qcirculant/string_pipeline.hpp"

namespace qcirc {

std::vector<SortableBlock> compare_exchange_round(std::vector<SortableBlock> blocks,
                                                  RoundPhase phase) {
    const std::size_t start = phase == RoundPhase::Even ? 0 : 1;
    for (std::size_t i = start; i + 1 < blocks.size(); i += 2) {
        // Strict inequality: equal keys are never exchanged.
        if (rank_less(blocks[i + 1].key, blocks[i].key)) {
            std::swap(blocks[i], blocks[i + 1]);
        }
    }
    return blocks;
}

std::vector<SortableBlock> odd_even_sort(std::vector<SortableBlock> blocks) {
    const std::size_t rounds = blocks.size();
    for (std::size_t r = 0; r < rounds; ++r) {
        blocks = compare_exchange_round(std::move(blocks),
                                        r % 2 == 0 ? RoundPhase::Even : RoundPhase::Odd);
    }
    return blocks;
}

std::uint64_t bucket_hash(std::string_view key, int granularity) {
    // char_rank values fit in [0, 257]; base 258^7 still fits 64 bits.
    constexpr std::uint64_t kBase = 258;
    if (granularity < 1 || granularity > 7) {
        throw std::invalid_argument("granularity must be in [1, 7]");
    }
    std::uint64_t hash = 0;
    for (int t = 0; t < granularity; ++t) {
        const std::uint64_t rank =
            t < static_cast<int>(key.size())
                ? static_cast<std::uint64_t>(char_rank(key[static_cast<std::size_t>(t)]))
                : 0;
        hash = hash * kBase + rank;
    }
    return hash;
}

std::size_t BucketMap::bucket_of(std::string_view key) const {
    const auto it = buckets.find(bucket_hash(key, granularity));
    if (it == buckets.end()) {
        throw std::out_of_range("key prefix is not in the bucket map");
    }
    return it->second;
}

BucketMap build_bucket_map(const std::vector<SortableBlock>& blocks, int granularity) {
    std::set<std::uint64_t> prefixes;
    for (const auto& block : blocks) {
        prefixes.insert(bucket_hash(block.key, granularity));
    }
    BucketMap map;
    map.granularity = granularity;
    std::size_t index = 0;
    for (std::uint64_t prefix : prefixes) {
        map.buckets.emplace(prefix, index++);
    }
    return map;
}

}  // namespace qcirc
