#pragma once

#include <stdexcept>
#include <vector>

#include "svira/rational.hpp"

namespace svira {

using RatMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<size_t> rref(RatMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].isZero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].isZero()) continue;
            Rational f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t rank(RatMatrix m) { return rref(m).size(); }

// Basis of the right nullspace of m (vectors of length cols).
inline std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> isPivot(cols, false);
    for (size_t p : pivots) isPivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> v(cols);
        v[freeCol] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i) {
            // pivot row i has leading one at pivots[i]
            v[pivots[i]] = -m[i][freeCol];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    RatMatrix r(n, std::vector<Rational>(mcols));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].isZero()) continue;
            for (size_t j = 0; j < mcols; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

inline RatMatrix mat_identity(size_t n) {
    RatMatrix r(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) r[i][i] = Rational(1);
    return r;
}

inline RatMatrix mat_inverse(const RatMatrix& a) {
    size_t n = a.size();
    RatMatrix aug(n, std::vector<Rational>(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Rational(1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n) throw std::domain_error("mat_inverse: singular matrix");
    RatMatrix r(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

inline std::vector<Rational> mat_apply(const RatMatrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (!a[i][j].isZero()) r[i] += a[i][j] * v[j];
        }
    return r;
}

}  // namespace svira
