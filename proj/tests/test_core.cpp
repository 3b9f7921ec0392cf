// SPDX-License-Identifier: Apache-2.0
//
// Correlation kernels, conjugate-reversal, GCP/ZCP/quad verification.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "zcaq/catalog.hpp"
#include "zcaq/construct.hpp"
#include "zcaq/correlation.hpp"
#include "zcaq/types.hpp"
#include "zcaq/verify.hpp"

using namespace zcaq;

namespace {

const cplx kI{0.0, 1.0};

Sequence seq(std::vector<cplx> v) { return Sequence::from_entries(std::move(v)); }

Sequence rand_unimodular(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> dist(0.0, 2.0 * 3.14159265358979323846);
    std::vector<cplx> v;
    v.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) v.push_back(std::polar(1.0, dist(rng)));
    return Sequence::from_entries(std::move(v));
}

Array2D rand_array(std::mt19937& rng, int n1, int n2) {
    std::uniform_real_distribution<double> dist(0.0, 2.0 * 3.14159265358979323846);
    std::vector<cplx> v;
    v.reserve(std::size_t(n1) * std::size_t(n2));
    for (int i = 0; i < n1 * n2; ++i) v.push_back(std::polar(1.0, dist(rng)));
    return Array2D::from_entries(n1, n2, std::move(v));
}

double max_abs_diff(const Profile1D& p, const Profile1D& q) {
    double m = 0.0;
    for (std::size_t k = 0; k < p.vals.size(); ++k)
        m = std::max(m, std::abs(p.vals[k] - q.vals[k]));
    return m;
}

}  // namespace

TEST_CASE("roots of unity and exponent entries") {
    CHECK(gauss_unit(4, 0) == GaussInt{1, 0});
    CHECK(gauss_unit(4, 1) == GaussInt{0, -1});  // xi_4 = e^{-2*pi*i/4} = -i
    CHECK(gauss_unit(4, 2) == GaussInt{-1, 0});
    CHECK(gauss_unit(4, 3) == GaussInt{0, 1});
    CHECK(gauss_unit(2, 1) == GaussInt{-1, 0});
    CHECK(gauss_unit(1, 0) == GaussInt{1, 0});
    CHECK(std::abs(unit_entry(8, 1) - std::polar(1.0, -2.0 * 3.14159265358979323846 / 8.0)) < 1e-12);
    CHECK(std::abs(unit_entry(4, 3) - kI) < 1e-12);
}

TEST_CASE("pm string parsing") {
    const Sequence s = Sequence::from_pm_string("+-");
    REQUIRE(s.q.has_value());
    CHECK(*s.q == 2);
    CHECK(s.exponents == std::vector<int>{0, 1});
    CHECK(s.entries[0] == cplx{1.0, 0.0});
    CHECK(s.entries[1] == cplx{-1.0, 0.0});
    CHECK_THROWS_AS(Sequence::from_pm_string("+x"), std::invalid_argument);
}

TEST_CASE("sequence validation rejects non-unimodular entries") {
    CHECK_THROWS_AS(seq({cplx{0.5, 0.0}}).validate(), std::invalid_argument);
    CHECK_NOTHROW(seq({kI}).validate());
    // Out-of-range exponents are normalized mod q rather than rejected.
    const Sequence wrapped = Sequence::from_exponents(4, {4, -1});
    CHECK(wrapped.exponents == std::vector<int>{0, 3});
    CHECK(std::abs(wrapped.entries[1] - kI) < 1e-12);
}

TEST_CASE("xcorr_1d basics") {
    const Profile1D p = xcorr_1d(seq({1.0, 1.0}), seq({1.0, 1.0}));
    CHECK(std::abs(p.at(0) - 2.0) < 1e-12);
    CHECK(std::abs(p.at(1) - 1.0) < 1e-12);
    CHECK(std::abs(p.at(-1) - 1.0) < 1e-12);

    // Quaternary GCP halves of length 3.
    const Sequence x = seq({1.0, 1.0, -1.0});
    const Sequence y = seq({1.0, kI, 1.0});
    const Profile1D px = xcorr_1d(x, x);
    const Profile1D py = xcorr_1d(y, y);
    CHECK(std::abs(px.at(1)) < 1e-12);
    CHECK(std::abs(px.at(2) - (-1.0)) < 1e-12);
    CHECK(std::abs(py.at(1)) < 1e-12);
    CHECK(std::abs(py.at(2) - 1.0) < 1e-12);
    for (int tau = 1; tau <= 2; ++tau) CHECK(std::abs(px.at(tau) + py.at(tau)) < 1e-12);

    CHECK_THROWS_WITH_AS(xcorr_1d(x, seq({1.0})), "dimension mismatch", std::invalid_argument);
}

TEST_CASE("xcorr_2d basics") {
    const Array2D one = Array2D::from_entries(1, 1, {cplx{1.0, 0.0}});
    CHECK(std::abs(xcorr_2d(one, one).at(0, 0) - 1.0) < 1e-12);

    const Array2D ones = Array2D::from_entries(2, 2, std::vector<cplx>(4, cplx{1.0, 0.0}));
    const Profile2D p = xcorr_2d(ones, ones);
    CHECK(std::abs(p.at(0, 0) - 4.0) < 1e-12);
    CHECK(std::abs(p.at(1, 0) - 2.0) < 1e-12);
    CHECK(std::abs(p.at(1, 1) - 1.0) < 1e-12);

    QuadRecipe recipe;
    recipe.gcp = base_gcp(3);
    recipe.zcp = *find_seed(builtin_catalog(), "ex1_7_4");
    const Quad quad = build_quad(recipe);
    const Profile2D pe = xcorr_2d(quad.arrays[0], quad.arrays[0]);
    CHECK(std::abs(pe.at(0, 0) - 21.0) < 1e-12);

    CHECK_THROWS_WITH_AS(xcorr_2d(one, ones), "dimension mismatch", std::invalid_argument);
}

TEST_CASE("conj_reverse definition, involution, profile preservation") {
    const Sequence y = seq({1.0, kI, 1.0});
    const Sequence r = conj_reverse(y);
    CHECK(std::abs(r.entries[0] - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(r.entries[1] - (-kI)) < 1e-12);
    CHECK(std::abs(r.entries[2] - cplx{1.0, 0.0}) < 1e-12);

    const Sequence x = seq({1.0, 1.0, -1.0});
    const Sequence rx = conj_reverse(x);
    CHECK(std::abs(rx.entries[0] - cplx{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(rx.entries[1] - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(rx.entries[2] - cplx{1.0, 0.0}) < 1e-12);

    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const Sequence s = rand_unimodular(rng, 1 + rep);
        const Sequence rr = conj_reverse(conj_reverse(s));
        for (int i = 0; i < s.length(); ++i) CHECK(std::abs(rr.entries[std::size_t(i)] - s.entries[std::size_t(i)]) < 1e-12);
        CHECK(max_abs_diff(xcorr_1d(s, s), xcorr_1d(conj_reverse(s), conj_reverse(s))) < 1e-9);
    }

    // Exact path keeps the exponent representation.
    const Sequence q = Sequence::from_exponents(4, {0, 1, 2});
    const Sequence rq = conj_reverse(q);
    REQUIRE(rq.q.has_value());
    CHECK(rq.exponents == std::vector<int>{2, 3, 0});
}

TEST_CASE("verify_gcp") {
    CHECK(verify_gcp(seq({1.0, 1.0}), seq({1.0, -1.0})));
    CHECK(verify_gcp(Sequence::from_exponents(4, {0, 0, 2}), Sequence::from_exponents(4, {0, 3, 0})));
    CHECK_FALSE(verify_gcp(seq({1.0, 1.0, 1.0}), seq({1.0, 1.0, -1.0})));
    CHECK_THROWS_WITH_AS(verify_gcp(seq({1.0}), seq({1.0, 1.0})), "dimension mismatch",
                         std::invalid_argument);
}

TEST_CASE("max_zcz_width") {
    const SeedPair& ex1 = *find_seed(builtin_catalog(), "ex1_7_4");
    CHECK(max_zcz_width(ex1.a, ex1.b) == 4);
    const Profile1D sum = pair_aacf_sum(ex1.a, ex1.b);
    CHECK(std::abs(sum.at(4) - (-2.0)) < 1e-12);  // first nonzero sidelobe sum

    const SeedPair& ex2 = *find_seed(builtin_catalog(), "ex2_24_16");
    CHECK(max_zcz_width(ex2.a, ex2.b) == 16);

    for (int n : {1, 2, 3, 10, 26}) {
        const SeedPair p = base_gcp(n);
        CHECK(max_zcz_width(p.a, p.b) == n);
    }
    CHECK_THROWS_WITH_AS(max_zcz_width(seq({1.0}), seq({1.0, 1.0})), "dimension mismatch",
                         std::invalid_argument);
}

TEST_CASE("verify_zcaq on constructed quads") {
    QuadRecipe recipe;
    recipe.gcp = base_gcp(3);
    recipe.zcp = *find_seed(builtin_catalog(), "ex1_7_4");
    const Quad q1 = build_quad(recipe);
    const ZcaqReport r1 = verify_zcaq(q1);
    CHECK(r1.z1 == 4);
    CHECK(r1.z2 == 3);
    CHECK(std::abs(r1.peak - 84.0) < 1e-9);

    recipe.gcp = *find_seed(builtin_catalog(), "ex2_gcp32");
    recipe.zcp = *find_seed(builtin_catalog(), "ex2_24_16");
    const ZcaqReport r2 = verify_zcaq(build_quad(recipe));
    CHECK(r2.z1 == 16);
    CHECK(r2.z2 == 32);
    CHECK(std::abs(r2.peak - 3072.0) < 1e-9);
}

TEST_CASE("validate_quad rejects coincident arrays") {
    const Array2D one = Array2D::from_entries(1, 1, {cplx{1.0, 0.0}});
    Quad quad;
    quad.arrays = {one, one, one, one};
    quad.z1 = quad.z2 = 1;
    CHECK_THROWS_AS(validate_quad(quad), std::invalid_argument);
}

TEST_CASE("conjugate symmetry and peak normalization") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 1 + int(rng() % 32);
        const Sequence s = rand_unimodular(rng, n);
        const Profile1D p = xcorr_1d(s, s);
        CHECK(std::abs(p.at(0) - double(n)) < 1e-9);
        for (int tau = 0; tau < n; ++tau) {
            // Exact equality as computed: conjugate shifts sum identical terms.
            CHECK(p.at(-tau) == std::conj(p.at(tau)));
        }
    }
    std::mt19937 rng2(13);
    for (int rep = 0; rep < 20; ++rep) {
        const int n1 = 1 + int(rng2() % 8), n2 = 1 + int(rng2() % 8);
        const Array2D a = rand_array(rng2, n1, n2);
        const Profile2D p = xcorr_2d(a, a);
        CHECK(std::abs(p.at(0, 0) - double(n1 * n2)) < 1e-9);
        for (int t1 = -(n1 - 1); t1 < n1; ++t1)
            for (int t2 = -(n2 - 1); t2 < n2; ++t2)
                CHECK(p.at(-t1, -t2) == std::conj(p.at(t1, t2)));
    }
}

TEST_CASE("production kernels match the serial reference") {
    std::mt19937 rng(101);
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 1 + int(rng() % 64);
        const Sequence x = rand_unimodular(rng, n);
        const Sequence y = rand_unimodular(rng, n);
        worst = std::max(worst, max_abs_diff(xcorr_1d(x, y), ref::xcorr_1d(x, y)));
    }
    CHECK(worst < 1e-9);

    double worst2 = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const int n1 = 1 + int(rng() % 16), n2 = 1 + int(rng() % 16);
        const Array2D a = rand_array(rng, n1, n2);
        const Array2D b = rand_array(rng, n1, n2);
        const Profile2D p = xcorr_2d(a, b);
        const Profile2D q = ref::xcorr_2d(a, b);
        for (std::size_t k = 0; k < p.vals.size(); ++k)
            worst2 = std::max(worst2, std::abs(p.vals[k] - q.vals[k]));
    }
    CHECK(worst2 < 1e-9);
}

TEST_CASE("exact integer path agrees with the float path") {
    std::mt19937 rng(301);
    for (int q : {2, 4}) {
        for (int rep = 0; rep < 50; ++rep) {
            const int n = 1 + int(rng() % 24);
            std::vector<int> ea, eb;
            for (int i = 0; i < n; ++i) {
                ea.push_back(int(rng() % unsigned(q)));
                eb.push_back(int(rng() % unsigned(q)));
            }
            const Sequence x = Sequence::from_exponents(q, ea);
            const Sequence y = Sequence::from_exponents(q, eb);
            const auto exact = xcorr_1d_exact(x, y);
            REQUIRE(exact.has_value());
            const Profile1D lifted = exact->to_float();
            const Profile1D direct = xcorr_1d(x, y);
            for (std::size_t k = 0; k < lifted.vals.size(); ++k) {
                CHECK(std::llround(direct.vals[k].real()) == std::llround(lifted.vals[k].real()));
                CHECK(std::llround(direct.vals[k].imag()) == std::llround(lifted.vals[k].imag()));
                CHECK(std::abs(direct.vals[k] - lifted.vals[k]) < 1e-9);
            }
        }
    }
    // Non-exponent input has no exact path.
    CHECK_FALSE(xcorr_1d_exact(seq({kI}), seq({kI})).has_value());
}
