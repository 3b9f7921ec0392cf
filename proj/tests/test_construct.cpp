// SPDX-License-Identifier: Apache-2.0
//
// Quad construction, phase bookkeeping, correlation residue identity.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "zcaq/catalog.hpp"
#include "zcaq/construct.hpp"
#include "zcaq/correlation.hpp"
#include "zcaq/verify.hpp"

using namespace zcaq;

namespace {

QuadRecipe recipe_of(const std::string& gcp, const std::string& zcp) {
    QuadRecipe r;
    r.gcp = *find_seed(builtin_catalog(), gcp);
    r.zcp = *find_seed(builtin_catalog(), zcp);
    return r;
}

std::vector<std::vector<int>> transposed_exponents(const Array2D& a) {
    std::vector<std::vector<int>> rows;
    for (int j = 0; j < a.n2; ++j) {
        std::vector<int> row;
        for (int i = 0; i < a.n1; ++i) row.push_back(a.exp_at(i, j));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("the 7x3 quaternary quad matches its printed form") {
    const Quad quad = build_quad(recipe_of("gcp3", "ex1_7_4"));
    REQUIRE(quad.arrays[0].q.has_value());
    CHECK(*quad.arrays[0].q == 4);
    CHECK(quad.arrays[0].n1 == 7);
    CHECK(quad.arrays[0].n2 == 3);

    const std::vector<std::vector<int>> want1 = {
        {0, 0, 0, 0, 2, 2, 0}, {0, 0, 0, 0, 2, 2, 0}, {2, 2, 2, 2, 0, 0, 2}};
    const std::vector<std::vector<int>> want2 = {
        {0, 0, 2, 0, 2, 0, 0}, {3, 3, 1, 3, 1, 3, 3}, {0, 0, 2, 0, 2, 0, 0}};
    const std::vector<std::vector<int>> want3 = {
        {2, 2, 2, 2, 0, 0, 2}, {3, 3, 3, 3, 1, 1, 3}, {2, 2, 2, 2, 0, 0, 2}};
    const std::vector<std::vector<int>> want4 = {
        {2, 2, 0, 2, 0, 2, 2}, {0, 0, 2, 0, 2, 0, 0}, {0, 0, 2, 0, 2, 0, 0}};
    CHECK(transposed_exponents(quad.arrays[0]) == want1);
    CHECK(transposed_exponents(quad.arrays[1]) == want2);
    CHECK(transposed_exponents(quad.arrays[2]) == want3);
    CHECK(transposed_exponents(quad.arrays[3]) == want4);

    const ZcaqReport r = verify_zcaq(quad);
    CHECK(r.z1 == 4);
    CHECK(r.z2 == 3);
    CHECK(r.peak == 84.0);
}

TEST_CASE("degenerate recipe with two length-2 pairs") {
    const Quad quad = build_quad(recipe_of("gcp2", "gcp2"));
    CHECK(quad.arrays[0].n1 == 2);
    CHECK(quad.arrays[0].n2 == 2);
    const ZcaqReport r = verify_zcaq(quad);
    CHECK(r.z1 == 2);
    CHECK(r.z2 == 2);
    CHECK(r.peak == 16.0);
}

TEST_CASE("example quad at 24x32") {
    const Quad quad = build_quad(recipe_of("ex2_gcp32", "ex2_24_16"));
    CHECK(quad.arrays[0].n1 == 24);
    CHECK(quad.arrays[0].n2 == 32);
    const ZcaqReport r = verify_zcaq(quad);
    CHECK(r.z1 == 16);
    CHECK(r.z2 == 32);
    CHECK(r.peak == 3072.0);
}

TEST_CASE("phase_count") {
    CHECK(phase_count(recipe_of("gcp3", "ex1_7_4")) == 4);  // lcm(4, 2)
    CHECK(phase_count(recipe_of("gcp2", "gcp2")) == 2);
    QuadRecipe r = recipe_of("gcp2", "ex1_7_4");
    r.gcp.a = Sequence::from_exponents(8, {0, 0});
    r.gcp.b = Sequence::from_exponents(8, {0, 4});
    CHECK(phase_count(r) == 8);  // lcm(8, 2)

    QuadRecipe raw = recipe_of("gcp2", "ex1_7_4");
    raw.gcp.a = Sequence::from_entries({cplx{1.0, 0.0}, cplx{1.0, 0.0}});
    CHECK_THROWS_WITH_AS(phase_count(raw), "missing phase_order", std::invalid_argument);
}

TEST_CASE("validate_recipe rejects bad seeds") {
    QuadRecipe r = recipe_of("ex1_7_4", "gcp2");  // ZCP in the GCP slot
    CHECK_THROWS_AS(validate_recipe(r), std::invalid_argument);

    QuadRecipe overclaim = recipe_of("gcp3", "ex1_7_4");
    overclaim.zcp.claimed_z = 6;  // wider than the measured zone
    CHECK_THROWS_AS(validate_recipe(overclaim), std::invalid_argument);
}

TEST_CASE("coincident arrays are rejected") {
    // With the length-1 GCP (both halves [1]) the construction collapses:
    // X2 = b * y_0 and X4 = b * conj(x_0) coincide.
    CHECK_THROWS_AS(build_quad(recipe_of("gcp1", "ex1_7_4")), std::invalid_argument);
}

TEST_CASE("zone, residue, distinctness and column factorization over catalog recipes") {
    const std::vector<std::string> gcps = {"gcp2", "gcp3", "gcp10", "gcp26", "ex2_gcp32"};
    const std::vector<std::string> zcps = {"ex1_7_4", "ex2_24_16", "ex3_18_13"};
    for (const std::string& g : gcps)
        for (const std::string& z : zcps) {
            CAPTURE(g);
            CAPTURE(z);
            const QuadRecipe r = recipe_of(g, z);
            const Quad quad = build_quad(r);
            const int l = r.zcp.length();
            const int n = r.gcp.length();
            CHECK(quad.arrays[0].n1 == l);
            CHECK(quad.arrays[0].n2 == n);

            // Zone guarantee: at least (claimed Z, N).
            const ZcaqReport rep = verify_zcaq(quad);
            CHECK(rep.z1 >= r.zcp.claimed_z);
            CHECK(rep.z2 == n);
            CHECK(rep.peak == 4.0 * l * n);

            // Residue identity across the full surface.
            CHECK(quad_correlation_residue(quad, r.zcp));

            // Distinctness of the four arrays.
            CHECK_NOTHROW(validate_quad(quad));

            // Column factorization: X1 col j = x_j * a, X2 col j = y_j * b,
            // X3 col j = -conj(y_{n-1-j}) * a, X4 col j = conj(x_{n-1-j}) * b.
            for (int j = 0; j < n; ++j) {
                const Sequence c1 = quad.arrays[0].column(j);
                const Sequence c2 = quad.arrays[1].column(j);
                const Sequence c3 = quad.arrays[2].column(j);
                const Sequence c4 = quad.arrays[3].column(j);
                const cplx xj = r.gcp.a.entries[std::size_t(j)];
                const cplx yj = r.gcp.b.entries[std::size_t(j)];
                const cplx yr = -std::conj(r.gcp.b.entries[std::size_t(n - 1 - j)]);
                const cplx xr = std::conj(r.gcp.a.entries[std::size_t(n - 1 - j)]);
                for (int i = 0; i < l; ++i) {
                    const cplx ai = r.zcp.a.entries[std::size_t(i)];
                    const cplx bi = r.zcp.b.entries[std::size_t(i)];
                    CHECK(std::abs(c1.entries[std::size_t(i)] - xj * ai) < 1e-12);
                    CHECK(std::abs(c2.entries[std::size_t(i)] - yj * bi) < 1e-12);
                    CHECK(std::abs(c3.entries[std::size_t(i)] - yr * ai) < 1e-12);
                    CHECK(std::abs(c4.entries[std::size_t(i)] - xr * bi) < 1e-12);
                }
            }
        }
}

TEST_CASE("residue values at the zone edge") {
    // 7x3 quad: at (4, 0) the sum equals 2 * 3 * (rho_a(4) + rho_b(4)) = -12.
    const QuadRecipe r1 = recipe_of("gcp3", "ex1_7_4");
    const Quad q1 = build_quad(r1);
    const Profile2D s1 = [&] {
        if (auto exact = quad_aacf_sum_exact(q1)) return exact->to_float();
        return quad_aacf_sum(q1);
    }();
    CHECK(s1.at(4, 0) == -12.0);
    CHECK(s1.at(-4, 0) == -12.0);

    // 24x32 quad: magnitude 2 * 32 * 16 = 1024 at (16, 0); zero at (0, t2 != 0).
    const Quad q2 = build_quad(recipe_of("ex2_gcp32", "ex2_24_16"));
    const Profile2D s2 = [&] {
        if (auto exact = quad_aacf_sum_exact(q2)) return exact->to_float();
        return quad_aacf_sum(q2);
    }();
    CHECK(std::abs(s2.at(16, 0)) == 1024.0);
    for (int t2 = 1; t2 < 32; ++t2) CHECK(std::abs(s2.at(0, t2)) == 0.0);
}

TEST_CASE("residue rejects dimension mismatch") {
    const Quad quad = build_quad(recipe_of("gcp3", "ex1_7_4"));
    const SeedPair& other = *find_seed(builtin_catalog(), "ex2_24_16");
    CHECK_THROWS_WITH_AS(quad_correlation_residue(quad, other), "dimension mismatch",
                         std::invalid_argument);
}
