#pragma once

// Shared helpers for the unit tests: random points, unipotents, and small
// random rational-function matrices.

#include "gcl/matrix.hpp"

namespace gcl::testing {

inline PointMatrix random_point(Rng& rng, int n) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        PointMatrix p(n, Rational(0));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) p.at(i, j) = rng.small_int();
        bool ok = det_exact(p) != 0;
        // Generic points must also avoid the trailing-minor divisor so the
        // Gauss decompositions are defined.
        for (int i = 2; i <= n && ok; ++i) {
            auto idx = interval(i, n);
            ok = det_exact(p.submatrix(idx, idx)) != 0;
        }
        if (ok) return p;
    }
    throw GclError("random_point: could not find a generic point");
}

inline PointMatrix random_unipotent_lower(Rng& rng, int n) {
    PointMatrix p = PointMatrix::identity(n, Rational(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) p.at(i, j) = Rational(rng.uniform(-20, 20));
    return p;
}

inline PointMatrix random_unipotent_upper(Rng& rng, int n) {
    return random_unipotent_lower(rng, n).transpose();
}

inline Polynomial random_small_poly(Rng& rng, unsigned nvars, int terms, int maxdeg) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        int budget = (int)rng.uniform(0, maxdeg);
        for (int d = 0; d < budget; ++d) ++m.e[(size_t)rng.uniform(0, (int)nvars - 1)];
        ts.push_back({m, Rational(rng.uniform(-5, 5))});
    }
    return Polynomial::from_terms(nvars, std::move(ts));
}

inline RFMatrix random_rf_matrix(Rng& rng, int n, unsigned nvars) {
    RFMatrix m(n, RationalFunction(Polynomial::zero(nvars)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Polynomial num = random_small_poly(rng, nvars, 3, 2);
            Polynomial den = random_small_poly(rng, nvars, 2, 1);
            if (den.is_zero()) den = Polynomial::constant(nvars, 1);
            m.at(i, j) = RationalFunction(std::move(num), den);
        }
    return m;
}

inline std::vector<Rational> flatten(const PointMatrix& p) {
    std::vector<Rational> v;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.n(); ++j) v.push_back(p.at(i, j));
    return v;
}

// Evaluate a symbolic matrix at a point.
inline PointMatrix eval_at(const RFMatrix& m, const PointMatrix& p) {
    auto pt = flatten(p);
    PointMatrix out(m.n(), Rational(0));
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) out.at(i, j) = m.at(i, j).eval(pt);
    return out;
}

}  // namespace gcl::testing
