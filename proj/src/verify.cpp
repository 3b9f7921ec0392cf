// SPDX-License-Identifier: Apache-2.0

#include "zcaq/verify.hpp"

#include <cmath>

namespace zcaq {

namespace {

// Summed pair profile as floats; values coming off the exact path are
// integers represented exactly, so a tol < 1 zero test is an exact test.
Profile1D pair_sum_profile(const Sequence& x, const Sequence& y) {
    if (auto exact = pair_aacf_sum_exact(x, y)) return exact->to_float();
    return pair_aacf_sum(x, y);
}

}  // namespace

bool verify_gcp(const Sequence& x, const Sequence& y, double tol) {
    const int n = x.length();
    Profile1D sum = pair_sum_profile(x, y);
    if (std::abs(sum.at(0) - cplx{2.0 * n, 0.0}) > std::max(tol, 2.0 * n * kUnitTol)) return false;
    for (int tau = 1; tau <= n - 1; ++tau)
        if (std::abs(sum.at(tau)) > tol) return false;
    return true;
}

int max_zcz_width(const Sequence& x, const Sequence& y, double tol) {
    const int n = x.length();
    Profile1D sum = pair_sum_profile(x, y);
    int z = 1;
    for (int tau = 1; tau <= n - 1; ++tau) {
        if (std::abs(sum.at(tau)) > tol) break;
        z = tau + 1;
    }
    return z;
}

void validate_quad(const Quad& quad, double unit_tol) {
    const Array2D& first = quad.arrays[0];
    for (const Array2D& a : quad.arrays) {
        a.validate(unit_tol);
        if (a.n1 != first.n1 || a.n2 != first.n2)
            throw std::invalid_argument("quad arrays must share dims");
    }
    for (int m = 0; m < 4; ++m)
        for (int k = m + 1; k < 4; ++k)
            if (quad.arrays[std::size_t(m)].same_entries(quad.arrays[std::size_t(k)]))
                throw std::invalid_argument("quad arrays must be pairwise distinct");
    if (quad.z1 < 1 || quad.z1 > first.n1 || quad.z2 < 1 || quad.z2 > first.n2)
        throw std::invalid_argument("claimed zone out of range");
}

ZcaqReport verify_zcaq(const Quad& quad, double tol) {
    validate_quad(quad);
    const int n1 = quad.arrays[0].n1;
    const int n2 = quad.arrays[0].n2;

    Profile2D sum;
    if (auto exact = quad_aacf_sum_exact(quad))
        sum = exact->to_float();
    else
        sum = quad_aacf_sum(quad);

    ZcaqReport rep;
    rep.peak = std::abs(sum.at(0, 0));

    // grow along tau1 at tau2 = 0 (the summed surface has point symmetry,
    // so the positive half determines the zone)
    rep.z1 = 1;
    for (int t1 = 1; t1 <= n1 - 1; ++t1) {
        if (std::abs(sum.at(t1, 0)) > tol) break;
        rep.z1 = t1 + 1;
    }

    // widen along tau2 at the fixed tau1 extent
    rep.z2 = 1;
    for (int t2 = 1; t2 <= n2 - 1; ++t2) {
        bool clear = true;
        for (int t1 = -(rep.z1 - 1); t1 <= rep.z1 - 1 && clear; ++t1)
            if (std::abs(sum.at(t1, t2)) > tol) clear = false;
        if (!clear) break;
        rep.z2 = t2 + 1;
    }
    return rep;
}

}  // namespace zcaq
