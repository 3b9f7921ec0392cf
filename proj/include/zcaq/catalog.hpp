// SPDX-License-Identifier: Apache-2.0
//
// Seed-pair catalog: canonical Golay pairs, stored Z-complementary pairs,
// length admissibility arithmetic and the classical composition operators
// (concatenation doubling and the Turyn product).

#pragma once

#include <cstdint>

#include "zcaq/types.hpp"

namespace zcaq {

enum class PairKind { gcp, zcp };

struct SeedPair {
    std::string name;
    PairKind kind = PairKind::gcp;
    Sequence a;
    Sequence b;
    int claimed_z = 0;  // for a GCP this equals the length
    std::string provenance;
    std::optional<int> family_params;

    int length() const { return a.length(); }
};

enum class ZcpFamily { liu, avik, xie };

enum class Alphabet { binary, complex_unimodular };

// Stored literal pairs; length in {1, 2, 3, 10, 26} (3 is quaternary).
SeedPair base_gcp(int length);

// (x || y, x || -y): doubles the length, preserves the GCP property.
SeedPair golay_double(const SeedPair& p);

// Classical Turyn composition of two binary GCPs; length M*N.
SeedPair turyn_product(const SeedPair& p, const SeedPair& r);

// binary: N = 2^alpha * 10^beta * 26^gamma with alpha + gamma >= 1 - beta
// (N = 1 admissible as the empty product). complex: N = 2^(a+u) * 3^b *
// 5^c * 11^d * 13^e for some split with u <= c + e and
// b + c + d + e <= a + 2u + 1.
bool gcp_length_admissible(std::int64_t n, Alphabet alphabet);

// Stored ZCP literals by name (ex1_7_4, ex2_24_16, ex3_18_13, plus any
// search-generated entries merged into the active catalog).
SeedPair seed_zcp(const std::string& name);

// true iff the summed AACF of the pair matches the family's signature
// exactly: liu (L = 3*2^n): +-2^{n+1} only at tau = 2^{n+1}; avik
// (L = 2N+2): magnitude 4 exactly for 3N/2 < tau <= 2N, zero elsewhere;
// xie (L = 14*2^n): +-2^{n+2} at tau = 2^{n+3} + l*2^{n+1}, l in {0,1,2}.
// Throws when the length fits no parameterization of the family.
bool signature_check(const SeedPair& p, ZcpFamily family);

// Built-in entries; every entry is re-validated on first access (kind and
// claimed_z re-derived by the core operations).
const std::vector<SeedPair>& builtin_catalog();

// Warnings recorded while the built-in catalog was assembled (e.g. a
// literal failing validation and being replaced by a composed pair).
const std::vector<std::string>& catalog_warnings();

// Lookup by name across a pair list; nullptr when absent.
const SeedPair* find_seed(const std::vector<SeedPair>& pairs, std::string_view name);

// A GCP of the requested length: stored literal when available, otherwise
// composed from base pairs via Turyn products (binary lengths only).
SeedPair gcp_for_length(std::int64_t n);

// Validates a candidate GCP literal; on failure substitutes a doubling
// chain from the length-2 pair (candidate length must be a power of two)
// and reports the substitution through the warning string.
SeedPair gcp_literal_or_double(SeedPair candidate, std::string* warning);

// Re-derives kind/claimed_z; throws std::runtime_error with a
// transcription-error diagnostic on mismatch.
void validate_catalog_entry(const SeedPair& p);

}  // namespace zcaq
