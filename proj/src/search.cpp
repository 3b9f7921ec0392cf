// SPDX-License-Identifier: Apache-2.0

#include "zcaq/search.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "zcaq/verify.hpp"

namespace zcaq {

namespace {

// ---- bit-packed sequence encodings ----------------------------------
// binary: bit j of the mask is the exponent of position j.
// quaternary: 2-bit digit j at bits [2j, 2j+1].

int rho_binary(std::uint32_t mask, int l, int tau) {
    const int n = l - tau;
    const std::uint32_t diff = (mask ^ (mask >> tau)) & ((std::uint32_t(1) << n) - 1);
    return n - 2 * std::popcount(diff);
}

// digits spread into 4-bit lanes for SWAR mod-4 subtraction
std::uint64_t spread4(std::uint32_t mask, int l) {
    std::uint64_t s = 0;
    for (int j = 0; j < l; ++j) s |= std::uint64_t((mask >> (2 * j)) & 3u) << (4 * j);
    return s;
}

struct Corr4 {
    int re;
    int im;
};

Corr4 rho_quaternary(std::uint64_t spread, int l, int tau) {
    const int n = l - tau;
    const std::uint64_t lanes = n >= 16 ? ~std::uint64_t(0) : ((std::uint64_t(1) << (4 * n)) - 1);
    constexpr std::uint64_t kHi = 0x8888888888888888ull;
    constexpr std::uint64_t kLo2 = 0x3333333333333333ull;
    constexpr std::uint64_t kBit0 = 0x1111111111111111ull;
    constexpr std::uint64_t kBit1 = 0x2222222222222222ull;
    // per-lane (e_j - e_{j+tau}) mod 4; the |8 keeps lanes borrow-free
    const std::uint64_t d = (((spread | kHi) - (spread >> (4 * tau))) & kLo2) & lanes;
    const int n1 = std::popcount(d & kBit0);        // digits 1 and 3
    const int n2 = std::popcount(d & kBit1);        // digits 2 and 3
    const int n3 = std::popcount(d & (d >> 1) & kBit0);  // digit 3
    const int c3 = n3, c1 = n1 - n3, c2 = n2 - n3;
    const int c0 = n - c1 - c2 - c3;
    // xi_4^k contributions: k=0 -> 1, k=1 -> -i, k=2 -> -1, k=3 -> i
    return {c0 - c2, c3 - c1};
}

std::uint64_t fnv1a(const std::int8_t* data, int len) {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < len; ++i) {
        h ^= std::uint8_t(data[i]);
        h *= 1099511628211ull;
    }
    return h;
}

struct Entry {
    std::uint64_t hash;
    std::uint32_t mask;
};

struct Engine {
    int l = 0;
    int k = 0;  // truncated vector covers shifts 1..k
    bool quaternary = false;

    int vec_bytes() const { return quaternary ? 2 * k : k; }

    void sidelobe_vec(std::uint32_t mask, std::int8_t* out) const {
        if (quaternary) {
            const std::uint64_t s = spread4(mask, l);
            for (int tau = 1; tau <= k; ++tau) {
                const Corr4 c = rho_quaternary(s, l, tau);
                out[2 * (tau - 1)] = std::int8_t(c.re);
                out[2 * (tau - 1) + 1] = std::int8_t(c.im);
            }
        } else {
            for (int tau = 1; tau <= k; ++tau) out[tau - 1] = std::int8_t(rho_binary(mask, l, tau));
        }
    }

    // largest Z with vanishing summed sidelobes, by exact integer arithmetic
    int pair_zone(std::uint32_t ma, std::uint32_t mb) const {
        int z = 1;
        if (quaternary) {
            const std::uint64_t sa = spread4(ma, l), sb = spread4(mb, l);
            for (int tau = 1; tau < l; ++tau) {
                const Corr4 ca = rho_quaternary(sa, l, tau);
                const Corr4 cb = rho_quaternary(sb, l, tau);
                if (ca.re + cb.re != 0 || ca.im + cb.im != 0) break;
                z = tau + 1;
            }
        } else {
            for (int tau = 1; tau < l; ++tau) {
                if (rho_binary(ma, l, tau) + rho_binary(mb, l, tau) != 0) break;
                z = tau + 1;
            }
        }
        return z;
    }

    std::vector<int> exponents(std::uint32_t mask) const {
        std::vector<int> e(static_cast<std::size_t>(l));
        for (int j = 0; j < l; ++j)
            e[std::size_t(j)] = quaternary ? int((mask >> (2 * j)) & 3u) : int((mask >> j) & 1u);
        return e;
    }
};

using ExpPair = std::pair<std::vector<int>, std::vector<int>>;

struct Hit {
    ExpPair pair;
    int zone;
};

}  // namespace

std::pair<std::vector<int>, std::vector<int>> canonical_pair(int q, const std::vector<int>& a,
                                                             const std::vector<int>& b) {
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("canonical_pair requires an even phase order");
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    auto conj_of = [q](std::vector<int> v) {
        for (int& e : v) e = (q - e) % q;
        return v;
    };
    auto neg_of = [q](std::vector<int> v) {
        for (int& e : v) e = (e + q / 2) % q;
        return v;
    };
    std::optional<ExpPair> best;
    for (int swap = 0; swap < 2; ++swap) {
        std::vector<int> u = swap ? b : a;
        std::vector<int> v = swap ? a : b;
        for (int rev = 0; rev < 2; ++rev) {
            if (rev) {
                std::reverse(u.begin(), u.end());
                std::reverse(v.begin(), v.end());
            }
            for (int cj = 0; cj < 2; ++cj) {
                const std::vector<int> cu = cj ? conj_of(u) : u;
                const std::vector<int> cv = cj ? conj_of(v) : v;
                for (int na = 0; na < 2; ++na) {
                    const std::vector<int> fu = na ? neg_of(cu) : cu;
                    for (int nb = 0; nb < 2; ++nb) {
                        ExpPair cand{fu, nb ? neg_of(cv) : cv};
                        if (!best || cand < *best) best = std::move(cand);
                    }
                }
            }
            if (rev) {  // restore for the next swap iteration
                std::reverse(u.begin(), u.end());
                std::reverse(v.begin(), v.end());
            }
        }
    }
    return *best;
}

std::vector<SeedPair> search_zcp(const SearchSpec& spec) {
    const bool quaternary = spec.alphabet == SearchAlphabet::quaternary;
    const int cap = quaternary ? kQuaternarySearchCap : kBinarySearchCap;
    if (spec.length > cap) throw std::invalid_argument("search space too large");
    if (spec.length < 2) throw std::invalid_argument("length out of range");
    if (spec.min_z < 2 || spec.min_z > spec.length)
        throw std::invalid_argument("min_z out of range");

    Engine eng;
    eng.l = spec.length;
    eng.k = spec.min_z - 1;
    eng.quaternary = quaternary;
    const int vb = eng.vec_bytes();

    // enumeration set: with dedupe the first entry is normalized (exponent
    // 0 for binary, 0 or 1 for quaternary); canonical representatives
    // always satisfy that, so completeness is preserved.
    const int bits_per = quaternary ? 2 : 1;
    std::uint64_t count;
    if (spec.dedupe)
        count = quaternary ? (std::uint64_t(2) << (bits_per * (spec.length - 1)))
                           : (std::uint64_t(1) << (spec.length - 1));
    else
        count = std::uint64_t(1) << (bits_per * spec.length);
    auto mask_of = [&](std::uint64_t idx) -> std::uint32_t {
        if (!spec.dedupe) return std::uint32_t(idx);
        if (quaternary) return std::uint32_t((idx & 1) | ((idx >> 1) << 2));
        return std::uint32_t(idx << 1);
    };

    // pass 1: bucket table keyed by the hash of the truncated sidelobe vector
    std::vector<Entry> table(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < std::int64_t(count); ++i) {
        std::int8_t vec[64];
        const std::uint32_t mask = mask_of(std::uint64_t(i));
        eng.sidelobe_vec(mask, vec);
        table[std::size_t(i)] = {fnv1a(vec, vb), mask};
    }
    std::sort(table.begin(), table.end(), [](const Entry& x, const Entry& y) {
        return x.hash != y.hash ? x.hash < y.hash : x.mask < y.mask;
    });

    // pass 2: join each sequence against the bucket of negated vectors;
    // hash collisions only add candidates, which the exact zone check
    // filters out again.
    std::vector<Hit> hits;
#pragma omp parallel
    {
        std::vector<Hit> local;
        std::int8_t vec[64];
        std::int8_t negv[64];
#pragma omp for schedule(dynamic, 1024) nowait
        for (std::int64_t i = 0; i < std::int64_t(count); ++i) {
            const std::uint32_t ma = mask_of(std::uint64_t(i));
            eng.sidelobe_vec(ma, vec);
            for (int t = 0; t < vb; ++t) negv[t] = std::int8_t(-vec[t]);
            const std::uint64_t want = fnv1a(negv, vb);
            auto lo = std::lower_bound(table.begin(), table.end(), want,
                                       [](const Entry& e, std::uint64_t v) { return e.hash < v; });
            for (; lo != table.end() && lo->hash == want; ++lo) {
                const int z = eng.pair_zone(ma, lo->mask);
                if (z < spec.min_z) continue;
                ExpPair pair{eng.exponents(ma), eng.exponents(lo->mask)};
                if (spec.dedupe) pair = canonical_pair(quaternary ? 4 : 2, pair.first, pair.second);
                local.push_back({std::move(pair), z});
            }
        }
#pragma omp critical
        hits.insert(hits.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
    }

    std::sort(hits.begin(), hits.end(),
              [](const Hit& x, const Hit& y) { return x.pair < y.pair; });
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](const Hit& x, const Hit& y) { return x.pair == y.pair; }),
               hits.end());
    if (spec.limit.has_value() && std::int64_t(hits.size()) > *spec.limit)
        hits.resize(std::size_t(*spec.limit));

    const int q = quaternary ? 4 : 2;
    std::vector<SeedPair> out;
    out.reserve(hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
        SeedPair p;
        p.a = Sequence::from_exponents(q, hits[i].pair.first);
        p.b = Sequence::from_exponents(q, hits[i].pair.second);
        const int z = max_zcz_width(p.a, p.b);  // re-verify through the core predicate
        if (z < spec.min_z || z != hits[i].zone)
            throw std::runtime_error("search result failed re-verification");
        p.kind = z == spec.length ? PairKind::gcp : PairKind::zcp;
        p.claimed_z = z;
        p.name = std::string("search_") + (quaternary ? "q" : "b") + std::to_string(spec.length) +
                 "_z" + std::to_string(z) + "_" + std::to_string(i);
        p.provenance = "exhaustive search";
        out.push_back(std::move(p));
    }
    return out;
}

bool exists_binary_gcp(int length) {
    if (length < 1 || length > kBinarySearchCap)
        throw std::invalid_argument("length out of range");
    if (length == 1) return true;
    SearchSpec spec;
    spec.length = length;
    spec.min_z = length;
    spec.alphabet = SearchAlphabet::binary;
    spec.dedupe = true;
    spec.limit = 1;
    return !search_zcp(spec).empty();
}

}  // namespace zcaq
