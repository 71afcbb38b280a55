#include "gcl/poisson.hpp"

#include "gcl/linsolve.hpp"

namespace gcl {

PointMatrix gradient_matrix(const Polynomial& f, const PointMatrix& p) {
    int n = p.n();
    assert(f.nvars() == (unsigned)(n * n));
    std::vector<Rational> pt;
    pt.reserve((size_t)n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pt.push_back(p.at(i, j));
    PointMatrix g(n, Rational(0));
    for (const Term& t : f.terms()) {
        // Full monomial value, then per-variable division (recompute when the
        // coordinate vanishes).
        Rational full = t.c;
        bool has_zero = false;
        for (unsigned v = 0; v < f.nvars(); ++v) {
            unsigned e = t.m.e[v];
            if (!e) continue;
            if (pt[v] == 0) {
                has_zero = true;
                continue;
            }
            full *= rat_pow(pt[v], e);
        }
        for (unsigned v = 0; v < f.nvars(); ++v) {
            unsigned e = t.m.e[v];
            if (!e) continue;
            Rational dval;
            if (!has_zero) {
                dval = full * (int)e / pt[v];
            } else {
                // Derivative nonzero only if v is the unique vanishing
                // variable and it appears to the first power.
                bool ok = pt[v] == 0 && e == 1;
                if (ok)
                    for (unsigned w = 0; w < f.nvars() && ok; ++w)
                        if (w != v && t.m.e[w] > 0 && pt[w] == 0) ok = false;
                if (!ok) continue;
                dval = t.c * (int)e;
                for (unsigned w = 0; w < f.nvars(); ++w) {
                    if (w == v || !t.m.e[w]) continue;
                    dval *= rat_pow(pt[w], t.m.e[w]);
                }
            }
            // Position (j, i) for d/du_ij.
            int i = (int)(v / (unsigned)n) + 1, j = (int)(v % (unsigned)n) + 1;
            g.at(j, i) += dval;
        }
    }
    return g;
}

PointMatrix gradient_matrix(const RationalFunction& f, const PointMatrix& p) {
    int n = p.n();
    std::vector<Rational> pt;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pt.push_back(p.at(i, j));
    // d(f/D) = (grad f)/D - f * (grad D)/D^2 applied factor-wise.
    Rational denval(1);
    for (const auto& fac : f.den_factors()) {
        Rational v = fac.p.eval<Rational>(pt);
        if (v == 0) throw PoleAtPointError();
        denval *= rat_pow(v, fac.e);
    }
    Rational numval = f.numerator().eval<Rational>(pt);
    PointMatrix g = gradient_matrix(f.numerator(), p);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) g.at(i, j) /= denval;
    for (const auto& fac : f.den_factors()) {
        Rational v = fac.p.eval<Rational>(pt);
        PointMatrix gf = gradient_matrix(fac.p, p);
        Rational coef = numval / denval * fac.e / v;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) g.at(i, j) -= coef * gf.at(i, j);
    }
    return g;
}

Rational bracket_at_point(const BracketContext& ctx, const RationalFunction& f,
                          const RationalFunction& g, const PointMatrix& p) {
    return bracket_from_gradients(ctx, gradient_matrix(f, p), gradient_matrix(g, p), p);
}

RationalFunction bracket_symbolic(const BracketContext& ctx, const RationalFunction& f,
                                  const RationalFunction& g) {
    int n = ctx.triple.n();
    RFMatrix u = symbolic_u(n);
    auto grad = [&](const RationalFunction& h) {
        RFMatrix m(n, sc_zero(u.proto()));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                m.at(j, i) = h.derivative(uvar((unsigned)n, (unsigned)i, (unsigned)j));
        return m;
    };
    return bracket_from_gradients(ctx, grad(f), grad(g), u);
}

PointMatrix generic_point_for(const InitialSeed& seed, Rng& rng) {
    int n = seed.n;
    for (int attempt = 0; attempt < 16; ++attempt) {
        PointMatrix p(n, Rational(0));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) p.at(i, j) = rng.small_int();
        std::vector<Rational> pt;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) pt.push_back(p.at(i, j));
        bool ok = true;
        for (const auto& f : seed.vars)
            if (f.value.eval<Rational>(pt) == 0) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    throw GclError("generic_point_for: resampling limit reached");
}

CoefficientMatrix coefficient_matrix(const BracketContext& ctx, const InitialSeed& seed,
                                     Rng& rng, int npoints) {
    size_t total = seed.vars.size();
    CoefficientMatrix cm;
    cm.total = total;
    cm.omega.assign(total * total, Rational(0));
    for (int pt = 0; pt < npoints; ++pt) {
        PointMatrix p = generic_point_for(seed, rng);
        std::vector<Rational> flat;
        for (int i = 1; i <= seed.n; ++i)
            for (int j = 1; j <= seed.n; ++j) flat.push_back(p.at(i, j));
        std::vector<Rational> vals(total);
        std::vector<PointMatrix> grads(total, PointMatrix(seed.n, Rational(0)));
        for (size_t k = 0; k < total; ++k) {
            vals[k] = seed.vars[k].value.eval<Rational>(flat);
            grads[k] = gradient_matrix(seed.vars[k].value, p);
        }
        for (size_t i = 0; i < total; ++i)
            for (size_t j = i + 1; j < total; ++j) {
                Rational w = bracket_from_gradients(ctx, grads[i], grads[j], p) / (vals[i] * vals[j]);
                if (pt == 0) {
                    cm.at(i, j) = w;
                    cm.at(j, i) = -w;
                } else if (cm.at(i, j) != w) {
                    throw NotLogCanonical(i, j,
                                          seed.vars[i].name.str() + " vs " + seed.vars[j].name.str() +
                                              ": " + rat_str(cm.at(i, j)) + " != " + rat_str(w));
                }
            }
    }
    return cm;
}

ToricData toric_data(const BDTriple& t) {
    int n = t.n();
    // Conditions on h = (t_1..t_n): sum t_i = 0 and
    // (t_a - t_{a+1}) - (t_b - t_{b+1}) = 0 for gamma(a) = b.
    LinSystem sys;
    sys.cols = (size_t)n;
    sys.rows = 1 + t.gamma().size();
    sys.a.assign(sys.rows * sys.cols, Rational(0));
    sys.b.assign(sys.rows, Rational(0));
    for (int i = 0; i < n; ++i) sys.at(0, (size_t)i) = 1;
    size_t r = 1;
    for (auto [a, b] : t.gamma()) {
        sys.at(r, (size_t)a - 1) += 1;
        sys.at(r, (size_t)a) -= 1;
        sys.at(r, (size_t)b - 1) -= 1;
        sys.at(r, (size_t)b) += 1;
        ++r;
    }
    ToricData td;
    for (auto& v : nullspace(std::move(sys))) {
        // Scale to integers.
        Int l = 1;
        for (auto& q : v) l = boost::multiprecision::lcm(l, den(q));
        std::vector<long long> iv;
        for (auto& q : v) iv.push_back((long long)(num(q) * (l / den(q))));
        td.basis.push_back(std::move(iv));
    }
    return td;
}

PointMatrix random_h_gamma(const ToricData& td, int n, Rng& rng) {
    PointMatrix d = PointMatrix::identity(n, Rational(1));
    for (const auto& w : td.basis) {
        Rational lam(rng.uniform(1, 9), rng.uniform(1, 9));
        for (int i = 0; i < n; ++i) d.at(i + 1, i + 1) *= rat_pow(lam, w[(size_t)i]);
    }
    return d;
}

}  // namespace gcl
