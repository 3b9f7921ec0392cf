// SPDX-License-Identifier: Apache-2.0
//
// Quad construction from a GCP seed (x, y) of length N and a ZCP seed
// (a, b) of length L:
//   X1[i][j] = a_i * x_j                X2[i][j] = b_i * y_j
//   X3[i][j] = -a_i * conj(y_{N-1-j})   X4[i][j] = b_i * conj(x_{N-1-j})
// yielding an L x N quad with zero zone at least (Z, N).

#pragma once

#include "zcaq/catalog.hpp"
#include "zcaq/types.hpp"

namespace zcaq {

struct QuadRecipe {
    SeedPair gcp;  // length N
    SeedPair zcp;  // length L, claimed zone width Z
};

// Throws std::invalid_argument unless gcp verifies as a GCP and zcp has
// max_zcz_width >= its claimed_z.
void validate_recipe(const QuadRecipe& recipe);

// Builds the four arrays (exact exponent form whenever both seeds carry
// Gaussian phase orders) and rejects recipes whose arrays coincide.
Quad build_quad(const QuadRecipe& recipe);

// lcm(q0, q1) of the two seeds' phase orders; throws when either is raw.
int phase_count(const QuadRecipe& recipe);

// Checks the residue identity of the construction: the summed 2D AACF is
// 0 for every tau2 != 0 and equals 2N * (rho_a + rho_b)(tau1) at tau2 = 0.
bool quad_correlation_residue(const Quad& quad, const SeedPair& zcp, double tol = kDefaultTol);

}  // namespace zcaq
