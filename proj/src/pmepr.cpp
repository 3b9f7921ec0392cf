// SPDX-License-Identifier: Apache-2.0

#include "zcaq/pmepr.hpp"

#include <cmath>
#include <numbers>

#include "zcaq/correlation.hpp"

namespace zcaq {

namespace {

constexpr double kBoundSlack = 1e-6;  // grid peak can never exceed the bound

double iepr_at(const Sequence& col, double t, double f_c) {
    const int l = col.length();
    cplx s{};
    for (int i = 0; i < l; ++i) {
        const double arg = 2.0 * std::numbers::pi * (f_c + double(i)) * t;
        s += col.entries[std::size_t(i)] * cplx{std::cos(arg), std::sin(arg)};
    }
    return std::norm(s) / double(l);
}

}  // namespace

cplx baseband_signal(const Sequence& col, double t, double f_c) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("t outside [0, 1]");
    cplx s{};
    for (int i = 0; i < col.length(); ++i) {
        const double arg = 2.0 * std::numbers::pi * (f_c + double(i)) * t;
        s += col.entries[std::size_t(i)] * cplx{std::cos(arg), std::sin(arg)};
    }
    return s;
}

double measure_pmepr(const Sequence& col, int oversample) {
    if (oversample < 4) throw std::invalid_argument("undersampled peak estimate");
    const int l = col.length();
    const int points = oversample * l;
    double peak = 0.0;
    for (int k = 0; k < points; ++k)
        peak = std::max(peak, iepr_at(col, double(k) / double(points), 0.0));
    return peak;
}

std::vector<double> iepr_curve(const Sequence& col, int oversample, double f_c) {
    if (oversample < 4) throw std::invalid_argument("undersampled peak estimate");
    const int points = oversample * col.length();
    std::vector<double> curve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k)
        curve[std::size_t(k)] = iepr_at(col, double(k) / double(points), f_c);
    return curve;
}

double pmepr_bound_pair(const Sequence& a, const Sequence& b) {
    const int l = a.length();
    Profile1D sum;
    if (auto exact = pair_aacf_sum_exact(a, b))
        sum = exact->to_float();
    else
        sum = pair_aacf_sum(a, b);
    double acc = 0.0;
    for (int tau = 1; tau <= l - 1; ++tau) acc += std::abs(sum.at(tau));
    return 2.0 + (2.0 / double(l)) * acc;
}

double pmepr_bound_pair(const SeedPair& p) { return pmepr_bound_pair(p.a, p.b); }

FamilyBound family_bound(ZcpFamily family, std::optional<int> param) {
    switch (family) {
        case ZcpFamily::liu:
            return {2.0 + 4.0 / 3.0, 2.0 + 4.0 / 3.0};
        case ZcpFamily::xie:
            return {2.0 + 12.0 / 7.0, 2.0 + 12.0 / 7.0};
        case ZcpFamily::avik: {
            if (!param.has_value() || *param < 2 || *param % 2 != 0)
                throw std::invalid_argument("invalid params: avik requires an even N >= 2");
            const double n = double(*param);
            return {2.0 + 4.0 * n / (2.0 * n + 2.0), 4.0};
        }
    }
    throw std::invalid_argument("invalid params");
}

PmeprReport quad_pmepr_report(const Quad& quad, const SeedPair& seed_zcp, int oversample) {
    if (oversample < 4) throw std::invalid_argument("undersampled peak estimate");
    const int l = quad.arrays[0].n1;
    const int n = quad.arrays[0].n2;
    if (seed_zcp.length() != l) throw std::invalid_argument("dimension mismatch");

    PmeprReport rep;
    rep.oversample = oversample;
    rep.analytic_bound = pmepr_bound_pair(seed_zcp);
    rep.per_column.resize(std::size_t(4) * n);

#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int m = 0; m < 4; ++m)
        for (int j = 0; j < n; ++j) {
            const double v = measure_pmepr(quad.arrays[std::size_t(m)].column(j), oversample);
            rep.per_column[std::size_t(m) * n + j] = {m, j, v};
        }

    rep.max_pmepr = 0.0;
    for (int m = 0; m < 4; ++m) {
        double mx = 0.0;
        for (int j = 0; j < n; ++j) mx = std::max(mx, rep.per_column[std::size_t(m) * n + j].pmepr);
        rep.max_per_array[std::size_t(m)] = mx;
        rep.max_pmepr = std::max(rep.max_pmepr, mx);
    }
    if (rep.max_pmepr > rep.analytic_bound + kBoundSlack)
        throw std::runtime_error("measured PMEPR exceeds the analytic bound: construction or measurement bug");
    return rep;
}

}  // namespace zcaq
