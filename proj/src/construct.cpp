// SPDX-License-Identifier: Apache-2.0

#include "zcaq/construct.hpp"

#include <cmath>
#include <numeric>

#include "zcaq/correlation.hpp"
#include "zcaq/verify.hpp"

namespace zcaq {

void validate_recipe(const QuadRecipe& recipe) {
    if (!verify_gcp(recipe.gcp.a, recipe.gcp.b))
        throw std::invalid_argument("recipe GCP seed does not verify as a GCP");
    if (recipe.zcp.claimed_z < 1 || recipe.zcp.claimed_z > recipe.zcp.length())
        throw std::invalid_argument("recipe ZCP claimed zone out of range");
    if (max_zcz_width(recipe.zcp.a, recipe.zcp.b) < recipe.zcp.claimed_z)
        throw std::invalid_argument("recipe ZCP seed does not reach its claimed zone");
}

Quad build_quad(const QuadRecipe& recipe) {
    validate_recipe(recipe);
    const Sequence &a = recipe.zcp.a, &b = recipe.zcp.b;
    const Sequence &x = recipe.gcp.a, &y = recipe.gcp.b;
    const int l = a.length();
    const int n = x.length();

    Quad quad;
    if (a.exact() && b.exact() && x.exact() && y.exact()) {
        int q = std::lcm(std::lcm(*a.q, *b.q), std::lcm(*x.q, *y.q));
        if (q % 2 != 0) q *= 2;  // numeral -1 in X3 needs an even order
        auto scaled = [q](const Sequence& s) {
            std::vector<int> out(std::size_t(s.length()));
            const int f = q / *s.q;
            for (int i = 0; i < s.length(); ++i) out[std::size_t(i)] = s.exponents[std::size_t(i)] * f;
            return out;
        };
        const std::vector<int> sa = scaled(a), sb = scaled(b), sx = scaled(x), sy = scaled(y);
        std::vector<int> e1(std::size_t(l) * n), e2(e1.size()), e3(e1.size()), e4(e1.size());
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < n; ++j) {
                const std::size_t idx = std::size_t(i) * n + j;
                e1[idx] = (sa[std::size_t(i)] + sx[std::size_t(j)]) % q;
                e2[idx] = (sb[std::size_t(i)] + sy[std::size_t(j)]) % q;
                e3[idx] = (sa[std::size_t(i)] + q / 2 + (q - sy[std::size_t(n - 1 - j)])) % q;
                e4[idx] = (sb[std::size_t(i)] + (q - sx[std::size_t(n - 1 - j)])) % q;
            }
        quad.arrays[0] = Array2D::from_exponents(q, l, n, std::move(e1));
        quad.arrays[1] = Array2D::from_exponents(q, l, n, std::move(e2));
        quad.arrays[2] = Array2D::from_exponents(q, l, n, std::move(e3));
        quad.arrays[3] = Array2D::from_exponents(q, l, n, std::move(e4));
    } else {
        std::vector<cplx> v1(std::size_t(l) * n), v2(v1.size()), v3(v1.size()), v4(v1.size());
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < n; ++j) {
                const std::size_t idx = std::size_t(i) * n + j;
                v1[idx] = a.entries[std::size_t(i)] * x.entries[std::size_t(j)];
                v2[idx] = b.entries[std::size_t(i)] * y.entries[std::size_t(j)];
                v3[idx] = -a.entries[std::size_t(i)] * std::conj(y.entries[std::size_t(n - 1 - j)]);
                v4[idx] = b.entries[std::size_t(i)] * std::conj(x.entries[std::size_t(n - 1 - j)]);
            }
        quad.arrays[0] = Array2D::from_entries(l, n, std::move(v1));
        quad.arrays[1] = Array2D::from_entries(l, n, std::move(v2));
        quad.arrays[2] = Array2D::from_entries(l, n, std::move(v3));
        quad.arrays[3] = Array2D::from_entries(l, n, std::move(v4));
    }
    quad.z1 = recipe.zcp.claimed_z;
    quad.z2 = n;
    validate_quad(quad);  // rejects recipes whose arrays coincide
    return quad;
}

int phase_count(const QuadRecipe& recipe) {
    for (const Sequence* s : {&recipe.zcp.a, &recipe.zcp.b, &recipe.gcp.a, &recipe.gcp.b})
        if (!s->q.has_value()) throw std::invalid_argument("missing phase_order");
    return std::lcm(std::lcm(*recipe.zcp.a.q, *recipe.zcp.b.q),
                    std::lcm(*recipe.gcp.a.q, *recipe.gcp.b.q));
}

bool quad_correlation_residue(const Quad& quad, const SeedPair& zcp, double tol) {
    const int l = quad.arrays[0].n1;
    const int n = quad.arrays[0].n2;
    if (zcp.length() != l) throw std::invalid_argument("dimension mismatch");

    Profile2D sum;
    if (auto exact = quad_aacf_sum_exact(quad))
        sum = exact->to_float();
    else
        sum = quad_aacf_sum(quad);

    Profile1D pair_sum;
    if (auto exact = pair_aacf_sum_exact(zcp.a, zcp.b))
        pair_sum = exact->to_float();
    else
        pair_sum = pair_aacf_sum(zcp.a, zcp.b);

    for (int t1 = -(l - 1); t1 <= l - 1; ++t1)
        for (int t2 = -(n - 1); t2 <= n - 1; ++t2) {
            const cplx expected = t2 == 0 ? 2.0 * double(n) * pair_sum.at(t1) : cplx{};
            if (std::abs(sum.at(t1, t2) - expected) > tol) return false;
        }
    return true;
}

}  // namespace zcaq
