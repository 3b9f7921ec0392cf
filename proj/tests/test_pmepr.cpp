// SPDX-License-Identifier: Apache-2.0
//
// OFDM envelope measurement and analytic PMEPR bounds.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "zcaq/catalog.hpp"
#include "zcaq/construct.hpp"
#include "zcaq/pmepr.hpp"
#include "zcaq/verify.hpp"

using namespace zcaq;

namespace {

Sequence all_ones(int n) {
    return Sequence::from_entries(std::vector<cplx>(std::size_t(n), cplx{1.0, 0.0}));
}

}  // namespace

TEST_CASE("baseband_signal at sample points") {
    CHECK(std::abs(baseband_signal(all_ones(5), 0.0) - 5.0) < 1e-12);
    const Sequence pm = Sequence::from_pm_string("+-");
    CHECK(std::abs(baseband_signal(pm, 0.0)) < 1e-12);
    CHECK(std::abs(baseband_signal(pm, 0.5) - 2.0) < 1e-12);  // e^{pi i} flips the sign
    CHECK_THROWS_AS(baseband_signal(pm, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(baseband_signal(pm, -0.1), std::invalid_argument);
}

TEST_CASE("measure_pmepr basics") {
    CHECK(std::abs(measure_pmepr(all_ones(8), 64) - 8.0) < 1e-12);
    CHECK_THROWS_WITH_AS(measure_pmepr(all_ones(4), 3), "undersampled peak estimate",
                         std::invalid_argument);
    // PMEPR of any sequence lies in [1, L].
    const SeedPair& ex1 = *find_seed(builtin_catalog(), "ex1_7_4");
    const double v = measure_pmepr(ex1.a, 64);
    CHECK(v >= 1.0);
    CHECK(v <= 7.0);
}

TEST_CASE("measured values for the stored pairs at oversample 64") {
    const SeedPair& ex1 = *find_seed(builtin_catalog(), "ex1_7_4");
    const SeedPair& ex2 = *find_seed(builtin_catalog(), "ex2_24_16");
    const SeedPair& ex3 = *find_seed(builtin_catalog(), "ex3_18_13");
    CHECK(measure_pmepr(ex1.a, 64) == doctest::Approx(1.892874978387).epsilon(1e-9));
    CHECK(measure_pmepr(ex1.b, 64) == doctest::Approx(2.149783799640).epsilon(1e-9));
    CHECK(measure_pmepr(ex2.a, 64) == doctest::Approx(3.265483633556).epsilon(1e-9));
    CHECK(measure_pmepr(ex2.b, 64) == doctest::Approx(2.880073758322).epsilon(1e-9));
    CHECK(measure_pmepr(ex3.a, 64) == doctest::Approx(2.797515265352).epsilon(1e-9));
    CHECK(measure_pmepr(ex3.b, 64) == doctest::Approx(2.712739931367).epsilon(1e-9));
}

TEST_CASE("pair bounds") {
    for (int n : {1, 2, 3, 10, 26}) {
        const SeedPair p = base_gcp(n);
        CHECK(pmepr_bound_pair(p) == 2.0);  // GCP sidelobe sums vanish exactly
    }
    const SeedPair& ex1 = *find_seed(builtin_catalog(), "ex1_7_4");
    const SeedPair& ex2 = *find_seed(builtin_catalog(), "ex2_24_16");
    const SeedPair& ex3 = *find_seed(builtin_catalog(), "ex3_18_13");
    CHECK(std::abs(pmepr_bound_pair(ex1) - 26.0 / 7.0) < 1e-12);
    CHECK(std::abs(pmepr_bound_pair(ex2) - (2.0 + 4.0 / 3.0)) < 1e-12);
    CHECK(std::abs(pmepr_bound_pair(ex3) - 34.0 / 9.0) < 1e-12);
}

TEST_CASE("family bounds") {
    const FamilyBound liu = family_bound(ZcpFamily::liu);
    CHECK(std::abs(liu.bound - (2.0 + 4.0 / 3.0)) < 1e-12);
    CHECK(std::abs(liu.ceiling - (2.0 + 4.0 / 3.0)) < 1e-12);

    const FamilyBound xie = family_bound(ZcpFamily::xie);
    CHECK(std::abs(xie.bound - (2.0 + 12.0 / 7.0)) < 1e-12);

    const FamilyBound avik8 = family_bound(ZcpFamily::avik, 8);
    CHECK(std::abs(avik8.bound - 34.0 / 9.0) < 1e-12);
    CHECK(avik8.ceiling == 4.0);
    // The family values approach 4 from below as N grows.
    const FamilyBound avik100 = family_bound(ZcpFamily::avik, 100);
    CHECK(avik100.bound > avik8.bound);
    CHECK(avik100.bound < 4.0);

    CHECK_THROWS_AS(family_bound(ZcpFamily::avik), std::invalid_argument);
    CHECK_THROWS_AS(family_bound(ZcpFamily::avik, 7), std::invalid_argument);
    CHECK_THROWS_AS(family_bound(ZcpFamily::avik, 0), std::invalid_argument);
}

TEST_CASE("monotone refinement of the grid estimate") {
    const SeedPair& ex2 = *find_seed(builtin_catalog(), "ex2_24_16");
    for (const Sequence* s : {&ex2.a, &ex2.b}) {
        double prev = measure_pmepr(*s, 4);
        for (int os : {8, 16, 32, 64, 128}) {
            const double cur = measure_pmepr(*s, os);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("phase and carrier invariance") {
    const SeedPair& ex3 = *find_seed(builtin_catalog(), "ex3_18_13");
    const double base = measure_pmepr(ex3.a, 32);
    for (double theta : {0.3, 1.1, 2.9}) {
        std::vector<cplx> rotated;
        for (const cplx& e : ex3.a.entries) rotated.push_back(e * std::polar(1.0, theta));
        const Sequence rs = Sequence::from_entries(std::move(rotated));
        CHECK(std::abs(measure_pmepr(rs, 32) - base) < 1e-9);
    }
    // |S(t)| does not depend on the carrier offset.
    for (double t : {0.0, 0.17, 0.5, 0.99}) {
        const double m0 = std::abs(baseband_signal(ex3.a, t, 0.0));
        const double m7 = std::abs(baseband_signal(ex3.a, t, 7.25));
        CHECK(std::abs(m0 - m7) < 1e-9);
    }
}

TEST_CASE("quad report: column-pair identity and per-array maxima") {
    QuadRecipe r;
    r.gcp = *find_seed(builtin_catalog(), "gcp3");
    r.zcp = *find_seed(builtin_catalog(), "ex1_7_4");
    const Quad quad = build_quad(r);
    const PmeprReport rep = quad_pmepr_report(quad, r.zcp, 64);
    CHECK(rep.oversample == 64);
    CHECK(rep.per_column.size() == 4u * 3u);

    const double pa = measure_pmepr(r.zcp.a, 64);
    const double pb = measure_pmepr(r.zcp.b, 64);
    for (const ColumnPmepr& c : rep.per_column) {
        const double want = (c.array_index == 0 || c.array_index == 2) ? pa : pb;
        CHECK(std::abs(c.pmepr - want) < 1e-9);  // columns are unit multiples of a or b
    }
    CHECK(std::abs(rep.max_per_array[0] - pa) < 1e-9);
    CHECK(std::abs(rep.max_per_array[1] - pb) < 1e-9);
    CHECK(std::abs(rep.max_per_array[2] - pa) < 1e-9);
    CHECK(std::abs(rep.max_per_array[3] - pb) < 1e-9);
    CHECK(rep.max_pmepr == doctest::Approx(std::max(pa, pb)).epsilon(1e-12));
    CHECK(std::abs(rep.analytic_bound - 26.0 / 7.0) < 1e-12);
}

TEST_CASE("GCP-seeded quads stay at the complementary floor") {
    QuadRecipe r;
    r.gcp = *find_seed(builtin_catalog(), "gcp3");
    r.zcp = *find_seed(builtin_catalog(), "gcp10");  // a GCP is a ZCP with Z = L
    const Quad quad = build_quad(r);
    const PmeprReport rep = quad_pmepr_report(quad, r.zcp, 64);
    CHECK(rep.analytic_bound == 2.0);
    CHECK(rep.max_pmepr <= 2.0 + 1e-6);
}

TEST_CASE("bound dominance across catalog recipes and oversample levels") {
    const std::vector<std::string> gcps = {"gcp2", "gcp3", "gcp10"};
    const std::vector<std::string> zcps = {"ex1_7_4", "ex2_24_16", "ex3_18_13"};
    for (const std::string& g : gcps)
        for (const std::string& z : zcps) {
            QuadRecipe r;
            r.gcp = *find_seed(builtin_catalog(), g);
            r.zcp = *find_seed(builtin_catalog(), z);
            const Quad quad = build_quad(r);
            for (int os : {16, 64}) {
                const PmeprReport rep = quad_pmepr_report(quad, r.zcp, os);
                CHECK(rep.max_pmepr <= rep.analytic_bound + 0.01);
            }
        }
}
