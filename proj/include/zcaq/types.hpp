// SPDX-License-Identifier: Apache-2.0
//
// Core value types: unimodular sequences and 2D arrays, plus an exact
// Gaussian-integer representation for the 1-, 2- and 4-phase alphabets.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zcaq {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-6;  // threshold for "vanishes" checks
inline constexpr double kUnitTol = 1e-9;     // unimodularity slack

// Gaussian integer re + im*i. Entries of 1-, 2- and 4-phase sequences and
// all their correlation values live in Z[i], so those checks are exact.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend GaussInt operator+(GaussInt l, GaussInt r) { return {l.re + r.re, l.im + r.im}; }
    friend GaussInt operator-(GaussInt l, GaussInt r) { return {l.re - r.re, l.im - r.im}; }
    friend GaussInt operator*(GaussInt l, GaussInt r) {
        return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
    }
    friend bool operator==(GaussInt l, GaussInt r) { return l.re == r.re && l.im == r.im; }
    GaussInt conj() const { return {re, -im}; }
    GaussInt neg() const { return {-re, -im}; }
    bool zero() const { return re == 0 && im == 0; }
    double abs() const;
    cplx to_cplx() const { return {double(re), double(im)}; }
};

// true when xi_q is a Gaussian unit, i.e. q in {1, 2, 4}
bool gaussian_phase(int q);

// xi_q^k with xi_q = e^{-2*pi*i/q}; exact form, q must be in {1, 2, 4}
GaussInt gauss_unit(int q, int k);

// xi_q^k as a complex double, any q >= 1
cplx unit_entry(int q, int k);

// A unimodular sequence. When every entry is a power of xi_q the phase
// order q and the exponent vector are carried alongside the complex
// entries, which keeps binary/quaternary data exact end to end.
struct Sequence {
    std::vector<cplx> entries;
    std::optional<int> q;
    std::vector<int> exponents;  // same length as entries iff q is set

    int length() const { return int(entries.size()); }
    bool exact() const { return q.has_value() && gaussian_phase(*q); }
    GaussInt gauss_at(int i) const { return gauss_unit(*q, exponents[std::size_t(i)]); }

    static Sequence from_exponents(int q, std::vector<int> exps);
    static Sequence from_entries(std::vector<cplx> entries);
    // '+' -> 1, '-' -> -1 (binary literal, q = 2)
    static Sequence from_pm_string(std::string_view s);

    void validate(double unit_tol = kUnitTol) const;
    bool same_entries(const Sequence& other, double tol = kUnitTol) const;
};

// N1 x N2 unimodular array, row-major. Same optional exact representation
// as Sequence.
struct Array2D {
    int n1 = 0;
    int n2 = 0;
    std::vector<cplx> entries;  // n1 * n2, row-major
    std::optional<int> q;
    std::vector<int> exponents;

    cplx at(int i, int j) const { return entries[std::size_t(i) * n2 + j]; }
    int exp_at(int i, int j) const { return exponents[std::size_t(i) * n2 + j]; }
    bool exact() const { return q.has_value() && gaussian_phase(*q); }
    GaussInt gauss_at(int i, int j) const { return gauss_unit(*q, exp_at(i, j)); }

    static Array2D from_exponents(int q, int n1, int n2, std::vector<int> exps);
    static Array2D from_entries(int n1, int n2, std::vector<cplx> entries);

    void validate(double unit_tol = kUnitTol) const;
    bool same_entries(const Array2D& other, double tol = kUnitTol) const;
    Sequence column(int j) const;
    Array2D transposed() const;
};

// Four equal-size arrays with a claimed rectangular zero zone (z1, z2).
struct Quad {
    std::array<Array2D, 4> arrays;
    int z1 = 1;
    int z2 = 1;
};

}  // namespace zcaq
