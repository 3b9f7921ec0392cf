// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive ZCP discovery for small binary/quaternary lengths. Sequences
// are encoded as packed machine words (1 bit per binary entry, 4 bits per
// quaternary entry) and correlations evaluated with popcount arithmetic.
// Pairs are found meet-in-the-middle: sequences are bucketed by their
// truncated sidelobe vector rho(1..min_z-1) and buckets joined against
// exact negations, so the pair space is never enumerated directly.

#pragma once

#include <cstdint>

#include "zcaq/catalog.hpp"
#include "zcaq/types.hpp"

namespace zcaq {

enum class SearchAlphabet { binary, quaternary };

inline constexpr int kBinarySearchCap = 24;
inline constexpr int kQuaternarySearchCap = 12;

struct SearchSpec {
    int length = 0;
    int min_z = 0;
    SearchAlphabet alphabet = SearchAlphabet::binary;
    bool dedupe = true;  // reduce under the symmetry group below
    std::optional<std::int64_t> limit;
};

// Canonical representative of (a, b) under the group generated by:
// negate a, negate b, reverse both, conjugate both, swap the pair.
// Exponent vectors mod q; the representative is the lexicographic
// minimum of the concatenated vectors over the group orbit.
std::pair<std::vector<int>, std::vector<int>> canonical_pair(int q, const std::vector<int>& a,
                                                             const std::vector<int>& b);

// All pairs (canonical representatives when dedupe) with
// max_zcz_width >= min_z, sorted lexicographically on the encoding;
// complete over the space when limit is absent. Every result is
// re-verified through the core predicate before being returned.
std::vector<SeedPair> search_zcp(const SearchSpec& spec);

// true iff a binary GCP of this length exists, by exhaustive search;
// 1 <= length <= 24.
bool exists_binary_gcp(int length);

}  // namespace zcaq
