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

#ifndef QCIRCULANT_SORT_SIM_HPP_
#define QCIRCULANT_SORT_SIM_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qcirc {

/// A rotation string tagged with its originating block index.
struct SortableBlock {
    std::string key;
    std::size_t payload = 0;

    bool operator==(const SortableBlock&) const = default;
};

enum class RoundPhase { Even, Odd };

/// One parallel neighbor round: for each adjacent pair starting at an even
/// (resp. odd) index, swaps iff left > right. Comparisons use the shared
/// pad < sentinel < bytes order and are pairwise independent.
std::vector<SortableBlock> compare_exchange_round(std::vector<SortableBlock> blocks,
                                                  RoundPhase phase);

/// Alternating even/odd rounds, exactly n of them for n blocks, starting
/// even. The strict swap rule keeps equal keys in their original order.
std::vector<SortableBlock> odd_even_sort(std::vector<SortableBlock> blocks);

/// Order-preserving prefix hash: the first `granularity` characters packed
/// base-258 by char_rank, missing characters ranked 0. Keys that differ
/// within the prefix hash in lexicographic order; equal prefixes collide.
/// granularity must be in [1, 7] (the packed value must fit 64 bits).
std::uint64_t bucket_hash(std::string_view key, int granularity);

/// Prefix -> bucket index, order-preserving: prefix(a) < prefix(b) implies
/// bucket(a) < bucket(b).
struct BucketMap {
    int granularity = 1;
    std::map<std::uint64_t, std::size_t> buckets;  // prefix hash -> bucket index

    std::size_t bucket_of(std::string_view key) const;
};

BucketMap build_bucket_map(const std::vector<SortableBlock>& blocks, int granularity);

}  // namespace qcirc

#endif  // QCIRCULANT_SORT_SIM_HPP_
