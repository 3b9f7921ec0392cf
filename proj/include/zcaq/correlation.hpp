// SPDX-License-Identifier: Apache-2.0
//
// Aperiodic auto/cross-correlation in 1D and 2D. The kernels in the zcaq
// namespace are the production path (OpenMP across shifts); zcaq::ref
// holds a deliberately naive serial implementation kept as the test and
// benchmark oracle. Exact Gaussian-integer variants cover the 1-, 2- and
// 4-phase alphabets.

#pragma once

#include "zcaq/types.hpp"

namespace zcaq {

// Signed-shift profile, tau in [-(N-1), N-1], stored explicitly.
struct Profile1D {
    int length = 0;
    std::vector<cplx> vals;  // index tau + length - 1

    cplx at(int tau) const { return vals[std::size_t(tau + length - 1)]; }
};

// Signed-shift surface, tau1 in [-(N1-1), N1-1], tau2 in [-(N2-1), N2-1].
struct Profile2D {
    int n1 = 0;
    int n2 = 0;
    std::vector<cplx> vals;  // row-major (2*n1-1) x (2*n2-1)

    cplx at(int tau1, int tau2) const {
        return vals[std::size_t(tau1 + n1 - 1) * (2 * n2 - 1) + (tau2 + n2 - 1)];
    }
};

struct ExactProfile1D {
    int length = 0;
    std::vector<GaussInt> vals;

    GaussInt at(int tau) const { return vals[std::size_t(tau + length - 1)]; }
    Profile1D to_float() const;
};

struct ExactProfile2D {
    int n1 = 0;
    int n2 = 0;
    std::vector<GaussInt> vals;

    GaussInt at(int tau1, int tau2) const {
        return vals[std::size_t(tau1 + n1 - 1) * (2 * n2 - 1) + (tau2 + n2 - 1)];
    }
    Profile2D to_float() const;
};

// rho_{x,y}(tau) = sum_j x_j * conj(y_{j+tau}); negative shifts via
// rho_{x,y}(-tau) = conj(rho_{y,x}(tau)).
Profile1D xcorr_1d(const Sequence& x, const Sequence& y);

// 2D analog over all four sign quadrants.
Profile2D xcorr_2d(const Array2D& X, const Array2D& Y);

// output_k = conj(x_{N-1-k}); preserves the full auto-correlation profile.
Sequence conj_reverse(const Sequence& x);

// Exact paths; empty unless both inputs carry a Gaussian phase order.
std::optional<ExactProfile1D> xcorr_1d_exact(const Sequence& x, const Sequence& y);
std::optional<ExactProfile2D> xcorr_2d_exact(const Array2D& X, const Array2D& Y);

// rho_a + rho_b over the full signed range (auto-correlations).
Profile1D pair_aacf_sum(const Sequence& a, const Sequence& b);
std::optional<ExactProfile1D> pair_aacf_sum_exact(const Sequence& a, const Sequence& b);

// sum_m rho_{Xm} over the four arrays of a quad.
Profile2D quad_aacf_sum(const Quad& quad);
std::optional<ExactProfile2D> quad_aacf_sum_exact(const Quad& quad);

namespace ref {
// Serial reference kernels: direct translation of the defining sums.
Profile1D xcorr_1d(const Sequence& x, const Sequence& y);
Profile2D xcorr_2d(const Array2D& X, const Array2D& Y);
}  // namespace ref

}  // namespace zcaq
