#pragma once

#include <span>
#include <type_traits>
#include <vector>

#include "gcl/dual.hpp"
#include "gcl/ratfunc.hpp"

namespace gcl {

// Square matrix with 1-based indexing, matching the determinantal identities
// this engine is built from.
template <class S>
class Matrix {
public:
    Matrix() : n_(0) {}
    Matrix(int n, const S& fill) : n_(n), a_((size_t)n * n, fill) {}

    int n() const { return n_; }
    S& at(int i, int j) {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return a_[(size_t)(i - 1) * n_ + (j - 1)];
    }
    const S& at(int i, int j) const {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return a_[(size_t)(i - 1) * n_ + (j - 1)];
    }
    const S& proto() const {
        assert(n_ > 0);
        return a_[0];
    }

    static Matrix identity(int n, const S& proto_val) {
        Matrix m(n, sc_zero(proto_val));
        for (int i = 1; i <= n; ++i) m.at(i, i) = sc_one(proto_val);
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        assert(n_ == o.n_);
        Matrix r(n_, sc_zero(proto()));
        for (int i = 1; i <= n_; ++i)
            for (int k = 1; k <= n_; ++k) {
                if (sc_is_zero(at(i, k))) continue;
                for (int j = 1; j <= n_; ++j) {
                    if (sc_is_zero(o.at(k, j))) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        assert(n_ == o.n_);
        Matrix r(*this);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(n_ == o.n_);
        Matrix r(*this);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    Matrix transpose() const {
        Matrix r(n_, sc_zero(proto()));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Submatrix with the given rows and columns (1-based, ascending).
    Matrix submatrix(std::span<const int> rows, std::span<const int> cols) const {
        assert(rows.size() == cols.size());
        Matrix r((int)rows.size(), sc_zero(proto()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) r.at((int)i + 1, (int)j + 1) = at(rows[i], cols[j]);
        return r;
    }

private:
    int n_;
    std::vector<S> a_;
};

using PointMatrix = Matrix<Rational>;
using RFMatrix = Matrix<RationalFunction>;
using PolyMatrix = Matrix<Polynomial>;
using DualMatrix = Matrix<Dual>;

// Determinant over a field: plain fraction Gaussian elimination, pivot on the
// first nonzero entry. Works for Rational and Dual.
template <class S>
S det_field(Matrix<S> m) {
    int n = m.n();
    assert(n >= 1);
    S detv = sc_one(m.proto());
    for (int c = 1; c <= n; ++c) {
        int piv = 0;
        for (int r = c; r <= n; ++r)
            if (!sc_is_zero(m.at(r, c))) {
                piv = r;
                break;
            }
        if (!piv) return sc_zero(m.proto());
        if (piv != c) {
            for (int j = 1; j <= n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            detv = -detv;
        }
        detv = detv * m.at(c, c);
        for (int r = c + 1; r <= n; ++r) {
            if (sc_is_zero(m.at(r, c))) continue;
            S f = m.at(r, c) / m.at(c, c);
            for (int j = c; j <= n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return detv;
}

// Fraction-free (Bareiss) determinant over the polynomial ring; all interior
// divisions are exact.
Polynomial det_bareiss(Matrix<Polynomial> m);

// det of a matrix of rational functions: cofactor expansion for n <= 3,
// otherwise clear row denominators, run Bareiss, and divide back.
RationalFunction det_exact(const RFMatrix& m);

Rational det_exact(const PointMatrix& m);
Dual det_exact(const DualMatrix& m);
Polynomial det_exact(const PolyMatrix& m);

template <class S>
S minor_det(const Matrix<S>& m, std::span<const int> rows, std::span<const int> cols) {
    if (rows.empty()) return sc_one(m.proto());  // empty determinant is 1
    return det_exact(m.submatrix(rows, cols));
}

std::vector<int> interval(int a, int b);  // [a,b], empty when a > b

// Canonical-text grid of a symbolic matrix, one row per line (debug dumps).
std::string matrix_to_text(const RFMatrix& m);

// The symbolic coordinate matrix U with entries u_ij.
RFMatrix symbolic_u(int n);
PolyMatrix symbolic_u_poly(int n);

// Inverse of a unipotent lower (or upper) triangular matrix, by substitution.
template <class S>
Matrix<S> unipotent_lower_inverse(const Matrix<S>& m) {
    int n = m.n();
    Matrix<S> inv = Matrix<S>::identity(n, m.proto());
    // Column j of inv solves m x = e_j, forward substitution.
    for (int j = 1; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i) {
            S s = sc_zero(m.proto());
            for (int k = j; k < i; ++k) s += m.at(i, k) * inv.at(k, j);
            inv.at(i, j) = -s;
        }
    return inv;
}

template <class S>
Matrix<S> unipotent_upper_inverse(const Matrix<S>& m) {
    return unipotent_lower_inverse(m.transpose()).transpose();
}

// Substitute the u_ij symbols of f by the entries of M (row-major order).
// Throws DenominatorVanishesIdentically / PoleAtPoint when a substituted
// denominator collapses.
template <class S>
S substitute_matrix(const RationalFunction& f, const Matrix<S>& m) {
    int n = m.n();
    assert((unsigned)(n * n) == f.nvars());
    std::vector<S> point;
    point.reserve((size_t)n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) point.push_back(m.at(i, j));
    S v = f.numerator().eval<S>(std::span<const S>(point));
    for (const auto& fac : f.den_factors()) {
        S d = fac.p.eval<S>(std::span<const S>(point));
        if (sc_is_zero(d)) {
            if constexpr (std::is_same_v<S, RationalFunction>)
                throw DenominatorVanishesError();
            else
                throw PoleAtPointError();
        }
        for (int k = 0; k < fac.e; ++k) v = v / d;
    }
    return v;
}

// General inverse over a field-like scalar (division must succeed).
template <class S>
Matrix<S> inverse_field(Matrix<S> m) {
    int n = m.n();
    Matrix<S> inv = Matrix<S>::identity(n, m.proto());
    for (int c = 1; c <= n; ++c) {
        int piv = 0;
        for (int r = c; r <= n; ++r)
            if (!sc_is_zero(m.at(r, c))) {
                piv = r;
                break;
            }
        if (!piv) throw GclError("inverse_field: singular matrix");
        if (piv != c)
            for (int j = 1; j <= n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        S d = m.at(c, c);
        for (int j = 1; j <= n; ++j) {
            m.at(c, j) = m.at(c, j) / d;
            inv.at(c, j) = inv.at(c, j) / d;
        }
        for (int r = 1; r <= n; ++r) {
            if (r == c || sc_is_zero(m.at(r, c))) continue;
            S f = m.at(r, c);
            for (int j = 1; j <= n; ++j) {
                m.at(r, j) -= f * m.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

}  // namespace gcl
