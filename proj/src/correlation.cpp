// SPDX-License-Identifier: Apache-2.0

#include "zcaq/correlation.hpp"

namespace zcaq {

namespace {

void check_same_length(const Sequence& x, const Sequence& y) {
    if (x.length() != y.length()) throw std::invalid_argument("dimension mismatch");
}

void check_same_dims(const Array2D& X, const Array2D& Y) {
    if (X.n1 != Y.n1 || X.n2 != Y.n2) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Profile1D ExactProfile1D::to_float() const {
    Profile1D p;
    p.length = length;
    p.vals.reserve(vals.size());
    for (const GaussInt& v : vals) p.vals.push_back(v.to_cplx());
    return p;
}

Profile2D ExactProfile2D::to_float() const {
    Profile2D p;
    p.n1 = n1;
    p.n2 = n2;
    p.vals.reserve(vals.size());
    for (const GaussInt& v : vals) p.vals.push_back(v.to_cplx());
    return p;
}

Profile1D xcorr_1d(const Sequence& x, const Sequence& y) {
    check_same_length(x, y);
    const int n = x.length();
    Profile1D p;
    p.length = n;
    p.vals.assign(std::size_t(2 * n - 1), cplx{});
    const cplx* xv = x.entries.data();
    const cplx* yv = y.entries.data();
#pragma omp parallel for schedule(static) if (n > 64)
    for (int idx = 0; idx < 2 * n - 1; ++idx) {
        const int tau = idx - (n - 1);
        cplx acc{};
        if (tau >= 0) {
            for (int j = 0; j < n - tau; ++j) acc += xv[j] * std::conj(yv[j + tau]);
        } else {
            for (int j = 0; j < n + tau; ++j) acc += yv[j] * std::conj(xv[j - tau]);
            acc = std::conj(acc);
        }
        p.vals[std::size_t(idx)] = acc;
    }
    return p;
}

Profile2D xcorr_2d(const Array2D& X, const Array2D& Y) {
    check_same_dims(X, Y);
    const int n1 = X.n1, n2 = X.n2;
    Profile2D p;
    p.n1 = n1;
    p.n2 = n2;
    p.vals.assign(std::size_t(2 * n1 - 1) * std::size_t(2 * n2 - 1), cplx{});
#pragma omp parallel for collapse(2) schedule(static) if (n1 * n2 > 256)
    for (int u = 0; u < 2 * n1 - 1; ++u) {
        for (int v = 0; v < 2 * n2 - 1; ++v) {
            const int t1 = u - (n1 - 1);
            const int t2 = v - (n2 - 1);
            const int i0 = std::max(0, -t1), i1 = std::min(n1, n1 - t1);
            const int j0 = std::max(0, -t2), j1 = std::min(n2, n2 - t2);
            cplx acc{};
            for (int i = i0; i < i1; ++i)
                for (int j = j0; j < j1; ++j)
                    acc += X.at(i, j) * std::conj(Y.at(i + t1, j + t2));
            p.vals[std::size_t(u) * (2 * n2 - 1) + v] = acc;
        }
    }
    return p;
}

Sequence conj_reverse(const Sequence& x) {
    const int n = x.length();
    if (x.exact() || x.q.has_value()) {
        std::vector<int> exps(static_cast<std::size_t>(n));
        const int q = *x.q;
        for (int k = 0; k < n; ++k)
            exps[std::size_t(k)] = (q - x.exponents[std::size_t(n - 1 - k)]) % q;
        return Sequence::from_exponents(q, std::move(exps));
    }
    std::vector<cplx> entries(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) entries[std::size_t(k)] = std::conj(x.entries[std::size_t(n - 1 - k)]);
    return Sequence::from_entries(std::move(entries));
}

std::optional<ExactProfile1D> xcorr_1d_exact(const Sequence& x, const Sequence& y) {
    check_same_length(x, y);
    if (!x.exact() || !y.exact()) return std::nullopt;
    const int n = x.length();
    std::vector<GaussInt> xv(static_cast<std::size_t>(n)), yv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xv[std::size_t(i)] = x.gauss_at(i);
        yv[std::size_t(i)] = y.gauss_at(i);
    }
    ExactProfile1D p;
    p.length = n;
    p.vals.assign(std::size_t(2 * n - 1), GaussInt{});
    for (int idx = 0; idx < 2 * n - 1; ++idx) {
        const int tau = idx - (n - 1);
        GaussInt acc{};
        if (tau >= 0) {
            for (int j = 0; j < n - tau; ++j) acc = acc + xv[std::size_t(j)] * yv[std::size_t(j + tau)].conj();
        } else {
            for (int j = 0; j < n + tau; ++j) acc = acc + yv[std::size_t(j)] * xv[std::size_t(j - tau)].conj();
            acc = acc.conj();
        }
        p.vals[std::size_t(idx)] = acc;
    }
    return p;
}

std::optional<ExactProfile2D> xcorr_2d_exact(const Array2D& X, const Array2D& Y) {
    check_same_dims(X, Y);
    if (!X.exact() || !Y.exact()) return std::nullopt;
    const int n1 = X.n1, n2 = X.n2;
    std::vector<GaussInt> xv(std::size_t(n1) * n2), yv(std::size_t(n1) * n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            xv[std::size_t(i) * n2 + j] = X.gauss_at(i, j);
            yv[std::size_t(i) * n2 + j] = Y.gauss_at(i, j);
        }
    ExactProfile2D p;
    p.n1 = n1;
    p.n2 = n2;
    p.vals.assign(std::size_t(2 * n1 - 1) * std::size_t(2 * n2 - 1), GaussInt{});
#pragma omp parallel for collapse(2) schedule(static) if (n1 * n2 > 256)
    for (int u = 0; u < 2 * n1 - 1; ++u) {
        for (int v = 0; v < 2 * n2 - 1; ++v) {
            const int t1 = u - (n1 - 1);
            const int t2 = v - (n2 - 1);
            const int i0 = std::max(0, -t1), i1 = std::min(n1, n1 - t1);
            const int j0 = std::max(0, -t2), j1 = std::min(n2, n2 - t2);
            GaussInt acc{};
            for (int i = i0; i < i1; ++i)
                for (int j = j0; j < j1; ++j)
                    acc = acc + xv[std::size_t(i) * n2 + j] *
                                    yv[std::size_t(i + t1) * n2 + (j + t2)].conj();
            p.vals[std::size_t(u) * (2 * n2 - 1) + v] = acc;
        }
    }
    return p;
}

Profile1D pair_aacf_sum(const Sequence& a, const Sequence& b) {
    check_same_length(a, b);
    Profile1D pa = xcorr_1d(a, a);
    Profile1D pb = xcorr_1d(b, b);
    for (std::size_t i = 0; i < pa.vals.size(); ++i) pa.vals[i] += pb.vals[i];
    return pa;
}

std::optional<ExactProfile1D> pair_aacf_sum_exact(const Sequence& a, const Sequence& b) {
    check_same_length(a, b);
    auto pa = xcorr_1d_exact(a, a);
    auto pb = xcorr_1d_exact(b, b);
    if (!pa || !pb) return std::nullopt;
    for (std::size_t i = 0; i < pa->vals.size(); ++i) pa->vals[i] = pa->vals[i] + pb->vals[i];
    return pa;
}

Profile2D quad_aacf_sum(const Quad& quad) {
    Profile2D acc = xcorr_2d(quad.arrays[0], quad.arrays[0]);
    for (int m = 1; m < 4; ++m) {
        Profile2D p = xcorr_2d(quad.arrays[std::size_t(m)], quad.arrays[std::size_t(m)]);
        for (std::size_t i = 0; i < acc.vals.size(); ++i) acc.vals[i] += p.vals[i];
    }
    return acc;
}

std::optional<ExactProfile2D> quad_aacf_sum_exact(const Quad& quad) {
    auto acc = xcorr_2d_exact(quad.arrays[0], quad.arrays[0]);
    if (!acc) return std::nullopt;
    for (int m = 1; m < 4; ++m) {
        auto p = xcorr_2d_exact(quad.arrays[std::size_t(m)], quad.arrays[std::size_t(m)]);
        if (!p) return std::nullopt;
        for (std::size_t i = 0; i < acc->vals.size(); ++i) acc->vals[i] = acc->vals[i] + p->vals[i];
    }
    return acc;
}

namespace ref {

Profile1D xcorr_1d(const Sequence& x, const Sequence& y) {
    check_same_length(x, y);
    const int n = x.length();
    Profile1D p;
    p.length = n;
    p.vals.assign(std::size_t(2 * n - 1), cplx{});
    for (int tau = -(n - 1); tau <= n - 1; ++tau) {
        cplx acc{};
        for (int j = 0; j < n; ++j) {
            const int k = j + tau;
            if (k >= 0 && k < n) acc += x.entries[std::size_t(j)] * std::conj(y.entries[std::size_t(k)]);
        }
        p.vals[std::size_t(tau + n - 1)] = acc;
    }
    return p;
}

Profile2D xcorr_2d(const Array2D& X, const Array2D& Y) {
    check_same_dims(X, Y);
    const int n1 = X.n1, n2 = X.n2;
    Profile2D p;
    p.n1 = n1;
    p.n2 = n2;
    p.vals.assign(std::size_t(2 * n1 - 1) * std::size_t(2 * n2 - 1), cplx{});
    for (int t1 = -(n1 - 1); t1 <= n1 - 1; ++t1)
        for (int t2 = -(n2 - 1); t2 <= n2 - 1; ++t2) {
            cplx acc{};
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j) {
                    const int k = i + t1, l = j + t2;
                    if (k >= 0 && k < n1 && l >= 0 && l < n2)
                        acc += X.at(i, j) * std::conj(Y.at(k, l));
                }
            p.vals[std::size_t(t1 + n1 - 1) * (2 * n2 - 1) + (t2 + n2 - 1)] = acc;
        }
    return p;
}

}  // namespace ref

}  // namespace zcaq
