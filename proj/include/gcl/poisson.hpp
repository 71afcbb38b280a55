#pragma once

#include "gcl/cluster.hpp"
#include "gcl/rzero.hpp"

namespace gcl {

// Exact evaluation of the bracket {f,g} = <R+([grad f, U]), [grad g, U]>
//                                        - <[grad f, U], grad g . U>
// at rational points, with the gradient-matrix convention
// (grad f)_{ab} = df/du_{ba}.

struct BracketContext {
    BDTriple triple;
    RZeroData r0;

    BracketContext(const BDTriple& t, R0Mode mode) : triple(t), r0(solve_r0(t, mode)) {}
    BracketContext(const BDTriple& t, RZeroData r) : triple(t), r0(std::move(r)) {}
};

template <class S>
S trace_inner(const Matrix<S>& a, const Matrix<S>& b) {
    S acc = sc_zero(a.proto());
    for (int i = 1; i <= a.n(); ++i)
        for (int k = 1; k <= a.n(); ++k) acc += a.at(i, k) * b.at(k, i);
    return acc;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b - b * a;
}

// grad f at P, exactly, in one pass over the terms.
PointMatrix gradient_matrix(const Polynomial& f, const PointMatrix& p);
PointMatrix gradient_matrix(const RationalFunction& f, const PointMatrix& p);

// Bracket from precomputed gradients.
template <class S>
S bracket_from_gradients(const BracketContext& ctx, const Matrix<S>& grad_f,
                         const Matrix<S>& grad_g, const Matrix<S>& point) {
    Matrix<S> xf = commutator(grad_f, point);
    Matrix<S> xg = commutator(grad_g, point);
    return trace_inner(apply_r_plus(ctx.triple, ctx.r0, xf), xg) -
           trace_inner(xf, grad_g * point);
}

Rational bracket_at_point(const BracketContext& ctx, const RationalFunction& f,
                          const RationalFunction& g, const PointMatrix& p);

// Fully symbolic bracket (n = 3 spot checks).
RationalFunction bracket_symbolic(const BracketContext& ctx, const RationalFunction& f,
                                  const RationalFunction& g);

// Coefficient matrix of the bracket with respect to a seed: omega_ij with
// {psi_i, psi_j} = omega_ij psi_i psi_j, asserted constant across points.
struct CoefficientMatrix {
    size_t total = 0;
    std::vector<Rational> omega;  // total x total, antisymmetric
    Rational& at(size_t i, size_t j) { return omega[i * total + j]; }
    const Rational& at(size_t i, size_t j) const { return omega[i * total + j]; }
    bool row_is_zero(size_t i) const {
        for (size_t j = 0; j < total; ++j)
            if (at(i, j) != 0) return false;
        return true;
    }
};

struct NotLogCanonical : GclError {
    NotLogCanonical(size_t i, size_t j, std::string msg)
        : GclError("NotLogCanonical(" + std::to_string(i) + "," + std::to_string(j) + "): " + msg),
          i(i), j(j) {}
    size_t i, j;
};

// Sample a point where every seed value is nonzero (<= 16 attempts).
PointMatrix generic_point_for(const InitialSeed& seed, Rng& rng);

CoefficientMatrix coefficient_matrix(const BracketContext& ctx, const InitialSeed& seed,
                                     Rng& rng, int npoints = 3);

// The toric data: an integer basis of h_Gamma (traceless diagonals with
// alpha(h) = beta(h) whenever gamma(alpha) = beta).
struct ToricData {
    std::vector<std::vector<long long>> basis;  // each length n, entries sum to 0
    int k_gamma() const { return (int)basis.size(); }
};
ToricData toric_data(const BDTriple& t);

// Random rational element of H_Gamma built from the integer basis.
PointMatrix random_h_gamma(const ToricData& td, int n, Rng& rng);

}  // namespace gcl
