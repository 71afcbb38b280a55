#pragma once

#include "gcl/bd.hpp"
#include "gcl/matrix.hpp"

namespace gcl {

enum class R0Mode { Generic, Ringed };

// Diagonal operators attached to a BD triple: ring-gamma and its adjoint on
// diagonal matrices (block relabeling, negated on negatively oriented runs,
// zero off the nontrivial runs), and the orthogonal projections onto the
// run-supported diagonals and their complements.
std::vector<Rational> ring_gamma_diag(const BDTriple& t, const std::vector<Rational>& x);
std::vector<Rational> ring_gamma_star_diag(const BDTriple& t, const std::vector<Rational>& x);
std::vector<Rational> proj_run_diag(const BDTriple& t, const std::vector<Rational>& x, bool xruns,
                                    bool complement);

// Exact rational solution of the R0 system on the full diagonal Cartan of
// gl_n: R0 + R0^T = Id and R0(h_alpha - h_{gamma(alpha)}) = h_alpha for
// alpha in Gamma1, with h_alpha = e_{aa} - e_{a+1,a+1}. Ringed mode imposes
// in addition R0(proj_{Gamma1} - ring_gamma) = proj_{Gamma1} on diagonals
// and verifies the remaining three equivalent identities. Free parameters of
// the antisymmetric part are set to zero.
struct RZeroData {
    PointMatrix r0;  // n x n, acts on diagonals as vectors
    R0Mode mode = R0Mode::Generic;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    std::vector<Rational> apply_star(const std::vector<Rational>& x) const;  // transpose
};

RZeroData solve_r0(const BDTriple& t, R0Mode mode);

// gamma on strictly upper matrix units (the Lie-algebra action used by R+):
// e_ks -> e_{bar(k) bar(s)} on positively oriented runs, with the
// omega_0-twist sign on negatively oriented runs, zero outside.
template <class S>
Matrix<S> gamma_upper_units(const BDTriple& t, const Matrix<S>& m) {
    Matrix<S> out(m.n(), sc_zero(m.proto()));
    for (const Run& x : t.xruns()) {
        if (x.trivial()) continue;
        for (int k = x.a; k <= x.b; ++k)
            for (int s = k + 1; s <= x.b; ++s) {
                if (sc_is_zero(m.at(k, s))) continue;
                if (x.orient == Orientation::Positive)
                    out.at(t.bar_gamma(k), t.bar_gamma(s)) += m.at(k, s);
                else if ((k + s - 1) % 2 == 0)
                    out.at(t.bar_gamma(s), t.bar_gamma(k)) += m.at(k, s);
                else
                    out.at(t.bar_gamma(s), t.bar_gamma(k)) -= m.at(k, s);
            }
    }
    return out;
}

// gamma^* on strictly lower matrix units (adjoint of the above).
template <class S>
Matrix<S> gamma_star_lower_units(const BDTriple& t, const Matrix<S>& m) {
    Matrix<S> out(m.n(), sc_zero(m.proto()));
    for (const Run& y : t.yruns()) {
        if (y.trivial() || y.partner < 0) continue;
        for (int k = y.a; k <= y.b; ++k)
            for (int s = k + 1; s <= y.b; ++s) {
                if (sc_is_zero(m.at(s, k))) continue;
                if (y.orient == Orientation::Positive)
                    out.at(t.bar_gamma_star(s), t.bar_gamma_star(k)) += m.at(s, k);
                else if ((k + s - 1) % 2 == 0)
                    out.at(t.bar_gamma_star(k), t.bar_gamma_star(s)) += m.at(s, k);
                else
                    out.at(t.bar_gamma_star(k), t.bar_gamma_star(s)) -= m.at(s, k);
            }
    }
    return out;
}

template <class S>
Matrix<S> strict_upper(const Matrix<S>& m) {
    Matrix<S> out(m.n(), sc_zero(m.proto()));
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m.n(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}
template <class S>
Matrix<S> strict_lower(const Matrix<S>& m) {
    Matrix<S> out(m.n(), sc_zero(m.proto()));
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j < i; ++j) out.at(i, j) = m.at(i, j);
    return out;
}
template <class S>
Matrix<S> diag_part(const Matrix<S>& m) {
    Matrix<S> out(m.n(), sc_zero(m.proto()));
    for (int i = 1; i <= m.n(); ++i) out.at(i, i) = m.at(i, i);
    return out;
}

// R+ = (1/(1-gamma)) pi_> - (gamma^*/(1-gamma^*)) pi_< + R0 pi_0. The Neumann
// sums are finite by nilpotency.
template <class S>
Matrix<S> apply_r_plus(const BDTriple& t, const RZeroData& r0, const Matrix<S>& x) {
    int n = x.n();
    Matrix<S> out(n, sc_zero(x.proto()));
    Matrix<S> up = strict_upper(x);
    for (int guard = 0; guard <= n + 1; ++guard) {
        bool nonzero = false;
        for (int i = 1; i <= n && !nonzero; ++i)
            for (int j = 1; j <= n && !nonzero; ++j) nonzero = !sc_is_zero(up.at(i, j));
        if (!nonzero) break;
        out = out + up;
        up = gamma_upper_units(t, up);
    }
    Matrix<S> low = gamma_star_lower_units(t, strict_lower(x));
    for (int guard = 0; guard <= n + 1; ++guard) {
        bool nonzero = false;
        for (int i = 1; i <= n && !nonzero; ++i)
            for (int j = 1; j <= n && !nonzero; ++j) nonzero = !sc_is_zero(low.at(i, j));
        if (!nonzero) break;
        out = out - low;
        low = gamma_star_lower_units(t, low);
    }
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            const Rational& c = r0.r0.at(i, k);
            if (c == 0 || sc_is_zero(x.at(k, k))) continue;
            out.at(i, i) += sc_const(x.proto(), c) * x.at(k, k);
        }
    return out;
}

}  // namespace gcl
