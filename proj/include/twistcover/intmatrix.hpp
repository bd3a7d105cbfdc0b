// Dense integer matrices over arbitrary-precision integers, Smith normal
// form with unimodular transform tracking, and exact determinants.
#pragma once

#include <vector>

#include "twistcover/rational.hpp"

namespace twistcover {

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Integer> a;  // row major

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static IntegerMatrix identity(int n);

    Integer& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Integer& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y);

// Exact determinant (Bareiss fraction-free elimination). Square only.
Integer determinant(const IntegerMatrix& m);

// U*M*V = D with D diagonal, d_1 | d_2 | ... | d_r, d_i >= 0, and U, V
// unimodular. The decomposition is verified before returning; Vinv is the
// exact inverse of V (needed to pull canonical representatives back to the
// original basis).
struct SnfResult {
    IntegerMatrix D, U, V, Vinv;
};

SnfResult smith_normal_form(const IntegerMatrix& m);

// The diagonal of D, including zeros, length min(rows, cols).
std::vector<Integer> smith_diagonal(const IntegerMatrix& m);

}  // namespace twistcover
