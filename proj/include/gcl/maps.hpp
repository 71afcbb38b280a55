#pragma once

#include "gcl/bd.hpp"
#include "gcl/matrix.hpp"
#include "gcl/rzero.hpp"

namespace gcl {

// The birational maps of the construction, templated over the scalar so the
// same code runs symbolically (RationalFunction), numerically (Rational) and
// in forward-mode derivatives (Dual).

template <class S>
struct GaussPair {
    Matrix<S> first;   // upper triangular (lower-unipotent side), or unipotent upper
    Matrix<S> second;  // unipotent lower, or lower triangular with diagonal
};

// U = U_plus * U_minus with U_plus upper triangular and U_minus unipotent
// lower; entries by the classical minor formulas. Throws SingularLeadingMinor
// when a trailing principal minor vanishes identically (or at the point).
template <class S>
GaussPair<S> gauss_lower(const Matrix<S>& u) {
    int n = u.n();
    std::vector<S> trail;  // trail[i-1] = det u^{[i,n]}_{[i,n]}
    trail.resize((size_t)n + 1, sc_one(u.proto()));
    for (int i = n; i >= 1; --i) {
        auto idx = interval(i, n);
        trail[(size_t)i - 1] = det_exact(u.submatrix(idx, idx));
        if (sc_is_zero(trail[(size_t)i - 1])) throw SingularLeadingMinorError();
    }
    Matrix<S> up(n, sc_zero(u.proto()));
    Matrix<S> lo = Matrix<S>::identity(n, u.proto());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) {
            // [U_plus]_{ji} = det U^{[i,n]}_{{j} cup [i+1,n]} / det U^{[i+1,n]}_{[i+1,n]}
            std::vector<int> rows;
            rows.push_back(j);
            for (int k = i + 1; k <= n; ++k) rows.push_back(k);
            up.at(j, i) = minor_det(u, rows, interval(i, n)) / trail[(size_t)i];
            if (j < i) {
                // [U_minus]_{ij} = det U^{{j} cup [i+1,n]}_{[i,n]} / det U^{[i,n]}_{[i,n]}
                std::vector<int> cols;
                cols.push_back(j);
                for (int k = i + 1; k <= n; ++k) cols.push_back(k);
                lo.at(i, j) = minor_det(u, interval(i, n), cols) / trail[(size_t)i - 1];
            }
        }
    return {std::move(up), std::move(lo)};
}

// U = U_+ * U_ominus with U_+ unipotent upper, U_ominus lower triangular.
template <class S>
GaussPair<S> gauss_upper(const Matrix<S>& u) {
    auto g = gauss_lower(u.transpose());
    return {g.second.transpose(), g.first.transpose()};
}

namespace detail {

// omega_0 of a k-block: sum_j (-1)^{j-1} e_{k-j+1, j}; its inverse is
// (-1)^{k-1} omega_0.
template <class S>
Matrix<S> omega0(int k, const S& proto) {
    Matrix<S> w(k, sc_zero(proto));
    for (int j = 1; j <= k; ++j) {
        S v = sc_one(proto);
        if (j % 2 == 0) v = -v;
        w.at(k - j + 1, j) = v;
    }
    return w;
}

}  // namespace detail

// Group lift gamma-tilde-star on unipotent lower triangular matrices: per
// nontrivial X-run, pull the corresponding Y-run block back, relabeled for a
// positive orientation and omega_0-twisted-inverse-transposed for a negative
// one; identity elsewhere.
template <class S>
Matrix<S> gamma_tilde_star(const BDTriple& t, const Matrix<S>& nlower) {
    int n = nlower.n();
    Matrix<S> out = Matrix<S>::identity(n, nlower.proto());
    for (const Run& x : t.xruns()) {
        if (x.trivial()) continue;
        const Run& y = t.yruns()[(size_t)x.partner];
        int k = x.b - x.a + 1;
        if (x.orient == Orientation::Positive) {
            for (int i = x.a; i <= x.b; ++i)
                for (int j = x.a; j < i; ++j) out.at(i, j) = nlower.at(t.bar_gamma(i), t.bar_gamma(j));
        } else {
            // Local block of N over the Y-run, inverted and twisted.
            auto idx = interval(y.a, y.b);
            Matrix<S> blk = nlower.submatrix(idx, idx);
            Matrix<S> w = detail::omega0(k, nlower.proto());
            Matrix<S> winv = w;
            if (k % 2 == 0)
                for (int i = 1; i <= k; ++i)
                    for (int j = 1; j <= k; ++j) winv.at(i, j) = -winv.at(i, j);
            Matrix<S> img = w * unipotent_lower_inverse(blk).transpose() * winv;
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j < i; ++j) out.at(x.a + i - 1, x.a + j - 1) = img.at(i, j);
        }
    }
    return out;
}

// Group lift gamma-tilde on unipotent upper triangular matrices (X-run blocks
// pushed to Y-run blocks).
template <class S>
Matrix<S> gamma_tilde(const BDTriple& t, const Matrix<S>& nupper) {
    int n = nupper.n();
    Matrix<S> out = Matrix<S>::identity(n, nupper.proto());
    for (const Run& x : t.xruns()) {
        if (x.trivial()) continue;
        const Run& y = t.yruns()[(size_t)x.partner];
        int k = x.b - x.a + 1;
        if (x.orient == Orientation::Positive) {
            for (int i = x.a; i <= x.b; ++i)
                for (int j = i + 1; j <= x.b; ++j) out.at(t.bar_gamma(i), t.bar_gamma(j)) = nupper.at(i, j);
        } else {
            auto idx = interval(x.a, x.b);
            Matrix<S> blk = nupper.submatrix(idx, idx);
            Matrix<S> w = detail::omega0(k, nupper.proto());
            Matrix<S> winv = w;
            if (k % 2 == 0)
                for (int i = 1; i <= k; ++i)
                    for (int j = 1; j <= k; ++j) winv.at(i, j) = -winv.at(i, j);
            Matrix<S> img = w * unipotent_upper_inverse(blk).transpose() * winv;
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j) out.at(y.a + i - 1, y.a + j - 1) = img.at(i, j);
        }
    }
    return out;
}

// ring-gamma-tilde on invertible diagonal matrices, and its star version.
template <class S>
Matrix<S> ring_gamma_tilde_diag(const BDTriple& t, const Matrix<S>& d) {
    Matrix<S> out = Matrix<S>::identity(d.n(), d.proto());
    for (const Run& x : t.xruns()) {
        if (x.trivial()) continue;
        for (int i = x.a; i <= x.b; ++i)
            out.at(t.bar_gamma(i), t.bar_gamma(i)) = x.orient == Orientation::Positive
                                                         ? d.at(i, i)
                                                         : sc_one(d.proto()) / d.at(i, i);
    }
    return out;
}
template <class S>
Matrix<S> ring_gamma_tilde_star_diag(const BDTriple& t, const Matrix<S>& d) {
    Matrix<S> out = Matrix<S>::identity(d.n(), d.proto());
    for (const Run& y : t.yruns()) {
        if (y.trivial() || y.partner < 0) continue;
        for (int j = y.a; j <= y.b; ++j)
            out.at(t.bar_gamma_star(j), t.bar_gamma_star(j)) = y.orient == Orientation::Positive
                                                                   ? d.at(j, j)
                                                                   : sc_one(d.proto()) / d.at(j, j);
    }
    return out;
}

// F_k(U) = gamma-tilde-star([F_{k-1}(U)]_-) U; stabilizes at k = deg gamma.
template <class S>
Matrix<S> f_k(const BDTriple& t, const Matrix<S>& u, int k) {
    Matrix<S> f = u;
    for (int s = 0; s < k; ++s) f = gamma_tilde_star(t, gauss_lower(f).second) * u;
    return f;
}

template <class S>
Matrix<S> f_map(const BDTriple& t, const Matrix<S>& u) {
    return f_k(t, u, t.deg_gamma());
}

// F^op_k(U) = U gamma-tilde([F^op_{k-1}(U)]_+).
template <class S>
Matrix<S> f_op_k(const BDTriple& t, const Matrix<S>& u, int k) {
    Matrix<S> f = u;
    for (int s = 0; s < k; ++s) f = u * gamma_tilde(t, gauss_upper(f).first);
    return f;
}

template <class S>
Matrix<S> f_op_map(const BDTriple& t, const Matrix<S>& u) {
    return f_op_k(t, u, t.deg_gamma());
}

// rho(U) = prod_{i=1..deg gamma} (gamma-tilde-star)^i(U_-), left to right.
template <class S>
Matrix<S> rho_matrix(const BDTriple& t, const Matrix<S>& u) {
    Matrix<S> acc = Matrix<S>::identity(u.n(), u.proto());
    Matrix<S> cur = gauss_lower(u).second;
    for (int i = 1; i <= t.deg_gamma(); ++i) {
        cur = gamma_tilde_star(t, cur);
        acc = acc * cur;
    }
    return acc;
}

// Q(U) = rho(U)^{-1} U rho(U).
template <class S>
std::pair<Matrix<S>, Matrix<S>> q_map(const BDTriple& t, const Matrix<S>& u) {
    Matrix<S> r = rho_matrix(t, u);
    return {unipotent_lower_inverse(r) * u * r, r};
}

// F^c(U) = gamma-tilde-star(F(U)_-) U gamma-tilde-star(F(U)_-)^{-1}
// (equivalent to F(U) U F(U)^{-1}).
template <class S>
std::pair<Matrix<S>, Matrix<S>> f_c_map(const BDTriple& t, const Matrix<S>& u) {
    Matrix<S> m = gamma_tilde_star(t, gauss_lower(f_map(t, u)).second);
    return {m * u * unipotent_lower_inverse(m), m};
}

// rho^op(U) = prod^{<-}_{i>=1} (gamma-tilde)^i(U_+); Q^op(U) = rho^op U rho^op^{-1}.
template <class S>
Matrix<S> rho_op_matrix(const BDTriple& t, const Matrix<S>& u) {
    Matrix<S> acc = Matrix<S>::identity(u.n(), u.proto());
    Matrix<S> cur = gauss_upper(u).first;
    for (int i = 1; i <= t.deg_gamma(); ++i) {
        cur = gamma_tilde(t, cur);
        acc = cur * acc;  // right-to-left product
    }
    return acc;
}

template <class S>
std::pair<Matrix<S>, Matrix<S>> q_op_map(const BDTriple& t, const Matrix<S>& u) {
    Matrix<S> r = rho_op_matrix(t, u);
    return {r * u * unipotent_upper_inverse(r), r};
}

// F^{op,c}(U) = gamma-tilde(F^op(U)_+)^{-1} U gamma-tilde(F^op(U)_+).
template <class S>
std::pair<Matrix<S>, Matrix<S>> f_op_c_map(const BDTriple& t, const Matrix<S>& u) {
    Matrix<S> m = gamma_tilde(t, gauss_upper(f_op_map(t, u)).first);
    return {unipotent_upper_inverse(m) * u * m, m};
}

// Direct minor formulas for gamma-tilde-star of the Gauss factor U_-:
// independent of the block/inverse path above, used as a test oracle.
template <class S>
Matrix<S> gamma_tilde_star_of_gauss_direct(const BDTriple& t, const Matrix<S>& u) {
    int n = u.n();
    Matrix<S> out = Matrix<S>::identity(n, u.proto());
    for (const Run& x : t.xruns()) {
        if (x.trivial()) continue;
        for (int i = x.a; i <= x.b; ++i)
            for (int j = x.a; j < i; ++j) {
                int bi = t.bar_gamma(i), bj = t.bar_gamma(j);
                if (x.orient == Orientation::Positive) {
                    // det U^{{bar j} cup [bar i + 1, n]}_{[bar i, n]} over the
                    // trailing minor at bar i.
                    std::vector<int> cols;
                    cols.push_back(bj);
                    for (int c = bi + 1; c <= n; ++c) cols.push_back(c);
                    out.at(i, j) = minor_det(u, interval(bi, n), cols) /
                                   minor_det(u, interval(bi, n), interval(bi, n));
                } else {
                    // det U^{[bar i, n] minus {bar j}}_{[bar i + 1, n]} over
                    // the trailing minor at bar i + 1.
                    std::vector<int> cols;
                    for (int c = bi; c <= n; ++c)
                        if (c != bj) cols.push_back(c);
                    out.at(i, j) = minor_det(u, interval(bi + 1, n), cols) /
                                   minor_det(u, interval(bi + 1, n), interval(bi + 1, n));
                }
            }
    }
    return out;
}

// G_0(U) = theta-tilde-star(F~(U)_-)^{-1} gamma-tilde-star(F~(U)_-) for a
// subtriple t_small of t_big (F~ built from t_small).
template <class S>
Matrix<S> g0_matrix(const BDTriple& t_small, const BDTriple& t_big, const Matrix<S>& u) {
    if (!t_small.is_subtriple_of(t_big)) throw NotSubtripleError();
    Matrix<S> nm = gauss_lower(f_map(t_small, u)).second;
    return unipotent_lower_inverse(gamma_tilde_star(t_small, nm)) * gamma_tilde_star(t_big, nm);
}

// G(U) = G_0(U) prod^{->}_{i>=1} (gamma-tilde-star_big)^i(G_0(U));
// the birational map is U |-> G(U)^{-1} U G(U).
template <class S>
std::pair<Matrix<S>, Matrix<S>> g_birational(const BDTriple& t_small, const BDTriple& t_big,
                                             const Matrix<S>& u) {
    Matrix<S> g0 = g0_matrix(t_small, t_big, u);
    Matrix<S> g = g0;
    Matrix<S> cur = g0;
    for (int i = 1; i <= t_big.deg_gamma(); ++i) {
        cur = gamma_tilde_star(t_big, cur);
        g = g * cur;
    }
    return {unipotent_lower_inverse(g) * u * g, g};
}

// Direct closed form for G_0 when t_small removes exactly the pair (p, q):
// G_0 = I + sum alpha_ij(U) e_{p+i, p_-(Gamma1)+j}, the alphas given by
// minors of F~(U). Used as an independent oracle against g0_matrix.
template <class S>
Matrix<S> g0_direct(const BDTriple& t_small, const BDTriple& t_big, int p, const Matrix<S>& u) {
    if (!t_small.is_subtriple_of(t_big) || !t_big.in_gamma1(p) || t_small.in_gamma1(p))
        throw NotSubtripleError();
    int n = u.n();
    int q = t_big.gamma_of(p);
    int pm = BDTriple::minus_closure(p, t_big.gamma1());
    int pp = BDTriple::plus_closure(p, t_big.gamma1(), n);
    int d2 = pp - p, d1 = p - pm;
    Matrix<S> ft = f_map(t_small, u);
    auto denv = det_exact(ft.submatrix(interval(q + 1, n), interval(q + 1, n)));
    if (sc_is_zero(denv)) throw SingularLeadingMinorError();
    const Run& xr = t_big.xruns()[(size_t)t_big.xrun_of(p)];
    Matrix<S> out = Matrix<S>::identity(n, u.proto());
    for (int i = 1; i <= d2; ++i)
        for (int j = 1; j <= d1; ++j) {
            // J_ij depends on the orientation of the run containing p.
            std::vector<int> cols;
            int single = xr.orient == Orientation::Positive ? t_big.bar_gamma(pm + j)
                                                            : t_big.bar_gamma(p + i);
            int removed = xr.orient == Orientation::Positive ? t_big.bar_gamma(p + i)
                                                             : t_big.bar_gamma(pm + j);
            // The single column sits below q+1 in both orientations (for a
            // negative run, bar(p) = q+1), so the written column order
            // {single, rest ascending} is already sorted.
            assert(single <= q && removed >= q + 1);
            cols.push_back(single);
            for (int c = q + 1; c <= n; ++c)
                if (c != removed) cols.push_back(c);
            S val = minor_det(ft, interval(q + 1, n), cols) / denv;
            if ((i + 1) % 2 != 0) val = -val;
            out.at(p + i, pm + j) = val;
        }
    return out;
}

}  // namespace gcl
