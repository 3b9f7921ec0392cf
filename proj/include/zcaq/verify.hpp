// SPDX-License-Identifier: Apache-2.0
//
// Verification predicates: Golay pairs, Z-complementary pairs and
// complementary array quads. Zone convention: width Z means the summed
// correlation vanishes for all shifts with 0 < |tau| <= Z - 1.

#pragma once

#include "zcaq/correlation.hpp"
#include "zcaq/types.hpp"

namespace zcaq {

// true iff |rho_x(tau) + rho_y(tau)| <= tol for all 1 <= tau <= N-1 and
// the peak equals 2N. Exact on Gaussian-phase inputs.
bool verify_gcp(const Sequence& x, const Sequence& y, double tol = kDefaultTol);

// Largest Z <= N with |rho_x + rho_y| <= tol for 1 <= tau <= Z-1.
// Z = N means the pair is a GCP.
int max_zcz_width(const Sequence& x, const Sequence& y, double tol = kDefaultTol);

struct ZcaqReport {
    int z1 = 1;
    int z2 = 1;
    double peak = 0.0;  // |sum of the four auto-correlations at (0,0)|
};

// Throws std::invalid_argument unless the quad holds four distinct
// unimodular arrays of identical dims.
void validate_quad(const Quad& quad, double unit_tol = kUnitTol);

// Measures the maximal rectangular zero zone of the summed 2D AACF and
// the central peak (which equals 4*N1*N2 for unimodular arrays).
// The zone is grown along tau1 first, then widened along tau2.
ZcaqReport verify_zcaq(const Quad& quad, double tol = kDefaultTol);

}  // namespace zcaq
