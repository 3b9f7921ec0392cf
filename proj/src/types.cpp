// SPDX-License-Identifier: Apache-2.0

#include "zcaq/types.hpp"

#include <cmath>
#include <numbers>

namespace zcaq {

double GaussInt::abs() const { return std::hypot(double(re), double(im)); }

bool gaussian_phase(int q) { return q == 1 || q == 2 || q == 4; }

GaussInt gauss_unit(int q, int k) {
    if (!gaussian_phase(q)) throw std::invalid_argument("phase order not Gaussian");
    int r = ((k % q) + q) % q;
    if (q == 1) return {1, 0};
    if (q == 2) return r == 0 ? GaussInt{1, 0} : GaussInt{-1, 0};
    switch (r) {  // xi_4 = e^{-pi i / 2} = -i
        case 0: return {1, 0};
        case 1: return {0, -1};
        case 2: return {-1, 0};
        default: return {0, 1};
    }
}

cplx unit_entry(int q, int k) {
    if (q < 1) throw std::invalid_argument("phase order must be positive");
    if (gaussian_phase(q)) return gauss_unit(q, k).to_cplx();
    int r = ((k % q) + q) % q;
    double arg = -2.0 * std::numbers::pi * double(r) / double(q);
    return {std::cos(arg), std::sin(arg)};
}

Sequence Sequence::from_exponents(int q, std::vector<int> exps) {
    if (q < 1) throw std::invalid_argument("phase order must be positive");
    Sequence s;
    s.q = q;
    s.exponents.reserve(exps.size());
    s.entries.reserve(exps.size());
    for (int k : exps) {
        int r = ((k % q) + q) % q;
        s.exponents.push_back(r);
        s.entries.push_back(unit_entry(q, r));
    }
    return s;
}

Sequence Sequence::from_entries(std::vector<cplx> entries) {
    Sequence s;
    s.entries = std::move(entries);
    s.validate();
    return s;
}

Sequence Sequence::from_pm_string(std::string_view str) {
    std::vector<int> exps;
    exps.reserve(str.size());
    for (char c : str) {
        if (c == '+')
            exps.push_back(0);
        else if (c == '-')
            exps.push_back(1);
        else
            throw std::invalid_argument("pm string may only contain '+' and '-'");
    }
    return from_exponents(2, std::move(exps));
}

void Sequence::validate(double unit_tol) const {
    if (entries.empty()) throw std::invalid_argument("empty sequence");
    for (const cplx& e : entries)
        if (std::abs(std::abs(e) - 1.0) > unit_tol)
            throw std::invalid_argument("sequence entry is not unimodular");
    if (q.has_value()) {
        if (*q < 1) throw std::invalid_argument("phase order must be positive");
        if (exponents.size() != entries.size())
            throw std::invalid_argument("exponent vector length mismatch");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (exponents[i] < 0 || exponents[i] >= *q)
                throw std::invalid_argument("exponent out of range");
            if (std::abs(entries[i] - unit_entry(*q, exponents[i])) > unit_tol)
                throw std::invalid_argument("entry does not match its exponent");
        }
    }
}

bool Sequence::same_entries(const Sequence& other, double tol) const {
    if (entries.size() != other.entries.size()) return false;
    if (exact() && other.exact() && *q == *other.q) return exponents == other.exponents;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (std::abs(entries[i] - other.entries[i]) > tol) return false;
    return true;
}

Array2D Array2D::from_exponents(int q, int n1, int n2, std::vector<int> exps) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("array dims must be positive");
    if (exps.size() != std::size_t(n1) * std::size_t(n2))
        throw std::invalid_argument("exponent grid size mismatch");
    Array2D a;
    a.n1 = n1;
    a.n2 = n2;
    a.q = q;
    a.exponents.reserve(exps.size());
    a.entries.reserve(exps.size());
    for (int k : exps) {
        int r = ((k % q) + q) % q;
        a.exponents.push_back(r);
        a.entries.push_back(unit_entry(q, r));
    }
    return a;
}

Array2D Array2D::from_entries(int n1, int n2, std::vector<cplx> entries) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("array dims must be positive");
    if (entries.size() != std::size_t(n1) * std::size_t(n2))
        throw std::invalid_argument("entry grid size mismatch");
    Array2D a;
    a.n1 = n1;
    a.n2 = n2;
    a.entries = std::move(entries);
    a.validate();
    return a;
}

void Array2D::validate(double unit_tol) const {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("array dims must be positive");
    if (entries.size() != std::size_t(n1) * std::size_t(n2))
        throw std::invalid_argument("entry grid size mismatch");
    for (const cplx& e : entries)
        if (std::abs(std::abs(e) - 1.0) > unit_tol)
            throw std::invalid_argument("array entry is not unimodular");
    if (q.has_value()) {
        if (exponents.size() != entries.size())
            throw std::invalid_argument("exponent grid size mismatch");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (exponents[i] < 0 || exponents[i] >= *q)
                throw std::invalid_argument("exponent out of range");
            if (std::abs(entries[i] - unit_entry(*q, exponents[i])) > unit_tol)
                throw std::invalid_argument("entry does not match its exponent");
        }
    }
}

bool Array2D::same_entries(const Array2D& other, double tol) const {
    if (n1 != other.n1 || n2 != other.n2) return false;
    if (exact() && other.exact() && *q == *other.q) return exponents == other.exponents;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (std::abs(entries[i] - other.entries[i]) > tol) return false;
    return true;
}

Sequence Array2D::column(int j) const {
    if (j < 0 || j >= n2) throw std::invalid_argument("column index out of range");
    Sequence s;
    s.entries.reserve(std::size_t(n1));
    for (int i = 0; i < n1; ++i) s.entries.push_back(at(i, j));
    if (q.has_value()) {
        s.q = q;
        s.exponents.reserve(std::size_t(n1));
        for (int i = 0; i < n1; ++i) s.exponents.push_back(exp_at(i, j));
    }
    return s;
}

Array2D Array2D::transposed() const {
    Array2D t;
    t.n1 = n2;
    t.n2 = n1;
    t.q = q;
    t.entries.resize(entries.size());
    if (q.has_value()) t.exponents.resize(exponents.size());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            t.entries[std::size_t(j) * n1 + i] = at(i, j);
            if (q.has_value()) t.exponents[std::size_t(j) * n1 + i] = exp_at(i, j);
        }
    return t;
}

}  // namespace zcaq
