// SPDX-License-Identifier: Apache-2.0
//
// OFDM column-signal synthesis and PMEPR measurement. The baseband signal
// of a length-L column c is S(t) = sum_i c_i * e^{2*pi*i*(f_c + i)*t} with
// the sub-carrier spacing normalized to 1; IEPR(t) = |S(t)|^2 / L and
// PMEPR is the supremum of IEPR over one symbol, approximated from below
// on a uniform grid of oversample*L points.

#pragma once

#include "zcaq/catalog.hpp"
#include "zcaq/types.hpp"

namespace zcaq {

// S(t) at a single instant; t must lie in [0, 1]. f_c only rotates the
// phase, so magnitudes are carrier-invariant.
cplx baseband_signal(const Sequence& col, double t, double f_c = 0.0);

// max over t in {k / (oversample * L), k = 0..oversample*L-1} of IEPR(t).
// Monotonically non-decreasing under grid refinement. oversample >= 4.
double measure_pmepr(const Sequence& col, int oversample);

// IEPR samples on the same grid, in k order (CSV export).
std::vector<double> iepr_curve(const Sequence& col, int oversample, double f_c = 0.0);

// 2 + (2/L) * sum_{tau=1}^{L-1} |rho_a(tau) + rho_b(tau)|.
double pmepr_bound_pair(const Sequence& a, const Sequence& b);
double pmepr_bound_pair(const SeedPair& p);

struct FamilyBound {
    double bound = 0.0;    // value for the given parameters
    double ceiling = 0.0;  // stated family-wide ceiling
};

// liu: 2 + 4/3 for every n; avik(N): 2 + 4N/(2N+2), ceiling 4;
// xie: 2 + 12/7 for every n. avik requires an even N >= 2.
FamilyBound family_bound(ZcpFamily family, std::optional<int> param = std::nullopt);

struct ColumnPmepr {
    int array_index = 0;  // 0..3
    int column = 0;
    double pmepr = 0.0;
};

struct PmeprReport {
    std::vector<ColumnPmepr> per_column;  // array-major, column order
    std::array<double, 4> max_per_array{};
    double max_pmepr = 0.0;
    double analytic_bound = 0.0;
    int oversample = 0;
};

// Measures every column of all four arrays (parallel across columns,
// merged deterministically) against pmepr_bound_pair(seed_zcp). Throws
// when a measured value exceeds the bound beyond tolerance, which would
// indicate a construction or measurement bug.
PmeprReport quad_pmepr_report(const Quad& quad, const SeedPair& seed_zcp, int oversample);

}  // namespace zcaq
