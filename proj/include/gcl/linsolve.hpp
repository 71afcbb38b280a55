#pragma once

#include <optional>
#include <vector>

#include "gcl/rational.hpp"

namespace gcl {

// Exact dense linear algebra over Q, enough for the R0 system and the
// exchange-matrix inference. Row-major rows x cols.
struct LinSystem {
    size_t rows = 0, cols = 0;
    std::vector<Rational> a;  // rows x cols
    std::vector<Rational> b;  // rows

    Rational& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Rational& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

struct LinSolution {
    bool consistent = false;
    size_t rank = 0;
    size_t nullity = 0;
    std::vector<Rational> x;  // one solution, free variables set to zero
};

// Gauss-Jordan with deterministic pivoting (first nonzero in column order).
inline LinSolution linsolve(LinSystem s) {
    LinSolution out;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < s.cols && r < s.rows; ++c) {
        size_t piv = r;
        while (piv < s.rows && s.at(piv, c) == 0) ++piv;
        if (piv == s.rows) continue;
        if (piv != r) {
            for (size_t j = 0; j < s.cols; ++j) std::swap(s.at(piv, j), s.at(r, j));
            std::swap(s.b[piv], s.b[r]);
        }
        Rational d = s.at(r, c);
        for (size_t j = 0; j < s.cols; ++j) s.at(r, j) /= d;
        s.b[r] /= d;
        for (size_t i = 0; i < s.rows; ++i) {
            if (i == r || s.at(i, c) == 0) continue;
            Rational f = s.at(i, c);
            for (size_t j = 0; j < s.cols; ++j) s.at(i, j) -= f * s.at(r, j);
            s.b[i] -= f * s.b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    out.rank = r;
    out.nullity = s.cols - r;
    for (size_t i = r; i < s.rows; ++i)
        if (s.b[i] != 0) return out;  // inconsistent; rank/nullity still set
    out.consistent = true;
    out.x.assign(s.cols, Rational(0));
    for (size_t k = 0; k < pivot_col.size(); ++k) out.x[pivot_col[k]] = s.b[k];
    return out;
}

// Basis of the solution space of A x = 0 (free variables set to unit
// vectors in column order).
inline std::vector<std::vector<Rational>> nullspace(LinSystem s) {
    s.b.assign(s.rows, Rational(0));
    // Reduce, remembering pivot columns.
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < s.cols && r < s.rows; ++c) {
        size_t piv = r;
        while (piv < s.rows && s.at(piv, c) == 0) ++piv;
        if (piv == s.rows) continue;
        if (piv != r)
            for (size_t j = 0; j < s.cols; ++j) std::swap(s.at(piv, j), s.at(r, j));
        Rational d = s.at(r, c);
        for (size_t j = 0; j < s.cols; ++j) s.at(r, j) /= d;
        for (size_t i = 0; i < s.rows; ++i) {
            if (i == r || s.at(i, c) == 0) continue;
            Rational f = s.at(i, c);
            for (size_t j = 0; j < s.cols; ++j) s.at(i, j) -= f * s.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(s.cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t fc = 0; fc < s.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(s.cols, Rational(0));
        v[fc] = 1;
        for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -s.at(k, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gcl
