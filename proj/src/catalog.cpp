// SPDX-License-Identifier: Apache-2.0

#include "zcaq/catalog.hpp"

#include <cmath>
#include <sstream>

#include "zcaq/correlation.hpp"
#include "zcaq/verify.hpp"

namespace zcaq {

namespace {

constexpr std::int64_t kMaxComposedLength = 1 << 16;

bool is_pow2(std::int64_t v) { return v >= 1 && (v & (v - 1)) == 0; }

SeedPair make_gcp(std::string name, Sequence a, Sequence b, std::string provenance) {
    SeedPair p;
    p.name = std::move(name);
    p.kind = PairKind::gcp;
    p.claimed_z = a.length();
    p.a = std::move(a);
    p.b = std::move(b);
    p.provenance = std::move(provenance);
    return p;
}

SeedPair make_zcp(std::string name, Sequence a, Sequence b, int z, std::optional<int> family,
                  std::string provenance) {
    SeedPair p;
    p.name = std::move(name);
    p.kind = PairKind::zcp;
    p.claimed_z = z;
    p.a = std::move(a);
    p.b = std::move(b);
    p.family_params = family;
    p.provenance = std::move(provenance);
    return p;
}

// +-1 integer view of a binary sequence
std::vector<int> pm_values(const Sequence& s) {
    std::vector<int> v(std::size_t(s.length()));
    for (int i = 0; i < s.length(); ++i) v[std::size_t(i)] = s.exponents[std::size_t(i)] == 0 ? 1 : -1;
    return v;
}

bool is_binary(const Sequence& s) { return s.q.has_value() && *s.q == 2; }

// exponent of p dividing v
int valuation(std::int64_t& v, std::int64_t p) {
    int e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

}  // namespace

SeedPair base_gcp(int length) {
    switch (length) {
        case 1:
            return make_gcp("gcp1", Sequence::from_pm_string("+"), Sequence::from_pm_string("+"),
                            "stored literal");
        case 2:
            return make_gcp("gcp2", Sequence::from_pm_string("++"), Sequence::from_pm_string("+-"),
                            "stored literal");
        case 3:
            return make_gcp("gcp3", Sequence::from_exponents(4, {0, 0, 2}),
                            Sequence::from_exponents(4, {0, 3, 0}), "stored literal (quaternary)");
        case 10:
            return make_gcp("gcp10", Sequence::from_pm_string("+--+-+++++"),
                            Sequence::from_pm_string("++--+++-+-"), "stored literal");
        case 26:
            return make_gcp("gcp26", Sequence::from_pm_string("++++-++--+-+-+--+-+++--+++"),
                            Sequence::from_pm_string("++++-++--+-+++++-+---++---"), "stored literal");
        default:
            throw std::invalid_argument("no base GCP of length " + std::to_string(length) +
                                        "; supported base lengths: 1, 2, 3, 10, 26");
    }
}

SeedPair golay_double(const SeedPair& p) {
    if (!verify_gcp(p.a, p.b)) throw std::invalid_argument("golay_double requires a verified GCP");
    const int n = p.length();
    Sequence a, b;
    if (p.a.exact() && p.b.exact() && *p.a.q == *p.b.q) {
        const int q0 = *p.a.q;
        const int q = q0 % 2 == 0 ? q0 : 2 * q0;  // negation needs an even order
        const int scale = q / q0;
        std::vector<int> ea, eb;
        ea.reserve(std::size_t(2 * n));
        eb.reserve(std::size_t(2 * n));
        for (int k : p.a.exponents) ea.push_back(k * scale);
        for (int k : p.b.exponents) ea.push_back(k * scale);
        for (int k : p.a.exponents) eb.push_back(k * scale);
        for (int k : p.b.exponents) eb.push_back((k * scale + q / 2) % q);
        a = Sequence::from_exponents(q, std::move(ea));
        b = Sequence::from_exponents(q, std::move(eb));
    } else {
        std::vector<cplx> ea(p.a.entries), eb(p.a.entries);
        ea.insert(ea.end(), p.b.entries.begin(), p.b.entries.end());
        for (const cplx& e : p.b.entries) eb.push_back(-e);
        a = Sequence::from_entries(std::move(ea));
        b = Sequence::from_entries(std::move(eb));
    }
    SeedPair out = make_gcp(p.name + "_x2", std::move(a), std::move(b),
                            "doubling composition of " + p.name);
    if (!verify_gcp(out.a, out.b)) throw std::runtime_error("golay_double produced a non-GCP");
    return out;
}

SeedPair turyn_product(const SeedPair& p, const SeedPair& r) {
    if (!is_binary(p.a) || !is_binary(p.b) || !is_binary(r.a) || !is_binary(r.b))
        throw std::invalid_argument("turyn_product requires binary GCPs");
    if (!verify_gcp(p.a, p.b) || !verify_gcp(r.a, r.b))
        throw std::invalid_argument("turyn_product requires verified GCPs");
    const int m = p.length();
    const int n = r.length();
    const std::vector<int> a = pm_values(p.a), b = pm_values(p.b);
    const std::vector<int> c = pm_values(r.a), d = pm_values(r.b);
    // u, v have disjoint support and u + v = a, u - v = b (2u = a + b)
    std::vector<int> ex(std::size_t(m) * n), ey(std::size_t(m) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int u2 = a[std::size_t(j)] + b[std::size_t(j)];  // 2*u_j
            const int v2 = a[std::size_t(j)] - b[std::size_t(j)];  // 2*v_j
            const int x2 = c[std::size_t(i)] * u2 + d[std::size_t(n - 1 - i)] * v2;
            const int y2 = d[std::size_t(i)] * u2 - c[std::size_t(n - 1 - i)] * v2;
            const std::size_t idx = std::size_t(i) * m + j;
            ex[idx] = x2 > 0 ? 0 : 1;
            ey[idx] = y2 > 0 ? 0 : 1;
            if (x2 * x2 != 4 || y2 * y2 != 4)
                throw std::runtime_error("turyn_product produced a non-unimodular entry");
        }
    SeedPair out = make_gcp(p.name + "_x_" + r.name, Sequence::from_exponents(2, std::move(ex)),
                            Sequence::from_exponents(2, std::move(ey)),
                            "turyn composition of " + p.name + " and " + r.name);
    if (!verify_gcp(out.a, out.b)) throw std::runtime_error("turyn_product produced a non-GCP");
    return out;
}

bool gcp_length_admissible(std::int64_t n, Alphabet alphabet) {
    if (n < 1) throw std::invalid_argument("length must be positive");
    if (alphabet == Alphabet::binary) {
        if (n == 1) return true;  // empty product
        std::int64_t m = n;
        const int two = valuation(m, 2);
        const int five = valuation(m, 5);
        const int thirteen = valuation(m, 13);
        if (m != 1) return false;
        const int beta = five, gamma = thirteen;
        const int alpha = two - beta - gamma;  // 10 and 26 each consume one 2
        if (alpha < 0) return false;
        return alpha + gamma >= 1 - beta;
    }
    std::int64_t m = n;
    const int p2 = valuation(m, 2);
    const int b = valuation(m, 3);
    const int c = valuation(m, 5);
    const int d = valuation(m, 11);
    const int e = valuation(m, 13);
    if (m != 1) return false;
    // exists u with 0 <= u <= min(p2, c+e) and b+c+d+e <= (p2-u) + 2u + 1
    const int s = b + c + d + e;
    const int lo = std::max(0, s - p2 - 1);
    const int hi = std::min(p2, c + e);
    return lo <= hi;
}

SeedPair seed_zcp(const std::string& name) {
    const std::vector<SeedPair>& cat = builtin_catalog();
    const SeedPair* p = find_seed(cat, name);
    if (p != nullptr && p->kind == PairKind::zcp) return *p;
    std::ostringstream msg;
    msg << "unknown ZCP seed '" << name << "'; catalog:";
    for (const SeedPair& e : cat)
        if (e.kind == PairKind::zcp) msg << ' ' << e.name;
    throw std::invalid_argument(msg.str());
}

bool signature_check(const SeedPair& p, ZcpFamily family) {
    const int len = p.length();
    Profile1D sum;
    if (auto exact = pair_aacf_sum_exact(p.a, p.b))
        sum = exact->to_float();
    else
        sum = pair_aacf_sum(p.a, p.b);

    // expected magnitude per shift, 0 meaning "must vanish"
    std::vector<std::int64_t> expect(std::size_t(len), 0);
    if (family == ZcpFamily::liu) {
        // L = 3*2^n, support {2^{n+1}} with magnitude 2^{n+1}
        if (len % 3 != 0 || !is_pow2(len / 3))
            throw std::invalid_argument("length does not match the liu parameterization");
        const std::int64_t v = 2 * (len / 3);
        expect[std::size_t(v)] = v;
    } else if (family == ZcpFamily::avik) {
        // L = 2N+2 with even N, support (3N/2, 2N] with magnitude 4
        const int n = (len - 2) / 2;
        if (len % 2 != 0 || n < 2 || n % 2 != 0)
            throw std::invalid_argument("length does not match the avik parameterization");
        for (int tau = 3 * n / 2 + 1; tau <= 2 * n; ++tau) expect[std::size_t(tau)] = 4;
    } else {
        // L = 14*2^n, support {2^{n+3} + l*2^{n+1}} with magnitude 2^{n+2}
        if (len % 14 != 0 || !is_pow2(len / 14))
            throw std::invalid_argument("length does not match the xie parameterization");
        const std::int64_t p2n = len / 14;  // 2^n
        for (int l = 0; l < 3; ++l) expect[std::size_t(8 * p2n + 2 * l * p2n)] = 4 * p2n;
    }

    for (int tau = 1; tau < len; ++tau) {
        const cplx s = sum.at(tau);
        const std::int64_t want = expect[std::size_t(tau)];
        if (want == 0) {
            if (std::abs(s) > kDefaultTol) return false;
        } else {
            // the stated signatures are +-(real magnitude)
            if (std::abs(s.imag()) > kDefaultTol) return false;
            if (std::abs(std::abs(s.real()) - double(want)) > kDefaultTol) return false;
        }
    }
    return true;
}

void validate_catalog_entry(const SeedPair& p) {
    auto fail = [&p](const std::string& why) {
        throw std::runtime_error("catalog transcription error: " + p.name + ": " + why);
    };
    try {
        p.a.validate();
        p.b.validate();
    } catch (const std::exception& ex) {
        fail(ex.what());
    }
    if (p.a.length() != p.b.length()) fail("pair length mismatch");
    const int z = max_zcz_width(p.a, p.b);
    if (p.kind == PairKind::gcp) {
        if (z != p.length()) fail("stored pair is not a GCP (max zone " + std::to_string(z) + ")");
        if (p.claimed_z != p.length()) fail("GCP claimed_z must equal the length");
    } else {
        if (z != p.claimed_z)
            fail("measured zone " + std::to_string(z) + " != claimed " + std::to_string(p.claimed_z));
        if (p.claimed_z >= p.length()) fail("ZCP with full-width zone should be stored as a GCP");
    }
}

SeedPair gcp_literal_or_double(SeedPair candidate, std::string* warning) {
    try {
        validate_catalog_entry(candidate);
        return candidate;
    } catch (const std::exception&) {
        const int len = candidate.length();
        if (!is_pow2(len) || len < 2) throw;
        SeedPair g = base_gcp(2);
        while (g.length() < len) g = golay_double(g);
        g.name = candidate.name;
        g.provenance = "doubling substitution (stored literal failed validation)";
        if (warning != nullptr)
            *warning = "catalog literal '" + candidate.name +
                       "' failed validation; substituted a doubling-composed pair";
        validate_catalog_entry(g);
        return g;
    }
}

namespace {

struct CatalogData {
    std::vector<SeedPair> pairs;
    std::vector<std::string> warnings;
};

CatalogData build_catalog() {
    CatalogData cat;
    cat.pairs.push_back(base_gcp(1));
    cat.pairs.push_back(base_gcp(2));
    cat.pairs.push_back(base_gcp(3));
    cat.pairs.push_back(base_gcp(10));
    cat.pairs.push_back(base_gcp(26));

    SeedPair g32 = make_gcp(
        "ex2_gcp32", Sequence::from_pm_string("+++++-+---+++--+++--+--+----+-+-"),
        Sequence::from_pm_string("-----+-+++---++-++--+--+----+-+-"), "stored literal");
    std::string warning;
    g32 = gcp_literal_or_double(std::move(g32), &warning);
    if (!warning.empty()) cat.warnings.push_back(warning);
    cat.pairs.push_back(std::move(g32));

    cat.pairs.push_back(make_zcp("ex1_7_4", Sequence::from_pm_string("++++--+"),
                                 Sequence::from_pm_string("++-+-++"), 4, std::nullopt,
                                 "stored literal"));
    cat.pairs.push_back(make_zcp("ex2_24_16", Sequence::from_pm_string("+-+-++-------++-+-+-++--"),
                                 Sequence::from_pm_string("-++-----++--+-+--++-----"), 16, 3,
                                 "stored literal (liu family, n = 3)"));
    cat.pairs.push_back(make_zcp("ex3_18_13", Sequence::from_pm_string("-+++-++-+-+---+++-"),
                                 Sequence::from_pm_string("++++---+--+--+----"), 13, 8,
                                 "stored literal (avik family, N = 8)"));

    for (const SeedPair& p : cat.pairs) validate_catalog_entry(p);
    return cat;
}

const CatalogData& catalog_data() {
    static const CatalogData cat = build_catalog();
    return cat;
}

}  // namespace

const std::vector<SeedPair>& builtin_catalog() { return catalog_data().pairs; }

const std::vector<std::string>& catalog_warnings() { return catalog_data().warnings; }

const SeedPair* find_seed(const std::vector<SeedPair>& pairs, std::string_view name) {
    for (const SeedPair& p : pairs)
        if (p.name == name) return &p;
    return nullptr;
}

SeedPair gcp_for_length(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("length must be positive");
    if (n == 1 || n == 2 || n == 3 || n == 10 || n == 26) return base_gcp(int(n));
    if (n == 32) return *find_seed(builtin_catalog(), "ex2_gcp32");
    if (n > kMaxComposedLength)
        throw std::invalid_argument("length too large for GCP composition");

    // quaternary 3 * 2^k via doubling
    if (n % 3 == 0 && is_pow2(n / 3)) {
        SeedPair g = base_gcp(3);
        while (g.length() < n) g = golay_double(g);
        return g;
    }

    if (!gcp_length_admissible(n, Alphabet::binary))
        throw std::invalid_argument("no stored or composed GCP for length " + std::to_string(n));
    std::int64_t m = n;
    std::vector<int> factors;
    while (m % 26 == 0) {
        factors.push_back(26);
        m /= 26;
    }
    while (m % 10 == 0) {
        factors.push_back(10);
        m /= 10;
    }
    while (m % 2 == 0) {
        factors.push_back(2);
        m /= 2;
    }
    SeedPair g = base_gcp(factors.back());
    factors.pop_back();
    for (int f : factors) g = turyn_product(g, base_gcp(f));
    g.name = "gcp" + std::to_string(n);
    g.provenance = "turyn composition of base pairs";
    return g;
}

}  // namespace zcaq
