#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gcl;
using namespace gcl::testing;

TEST_CASE("determinant basics") {
    // det of the 3x3 identity is 1; 0x0 determinant is 1.
    RFMatrix id = RFMatrix::identity(3, RationalFunction(Polynomial::zero(9)));
    CHECK(det_exact(id) == sc_one(id.proto()));
    PolyMatrix empty(0, Polynomial::zero(4));
    CHECK(det_bareiss(empty).is_one());

    // Symbolic 2x2: ad - bc.
    RFMatrix u = symbolic_u(2);
    auto d = det_exact(u);
    auto a = RationalFunction::variable(4, uvar(2, 1, 1));
    auto b = RationalFunction::variable(4, uvar(2, 1, 2));
    auto c = RationalFunction::variable(4, uvar(2, 2, 1));
    auto dd = RationalFunction::variable(4, uvar(2, 2, 2));
    CHECK(d == a * dd - b * c);
}

TEST_CASE("Desnanot-Jacobi holds identically on a symbolic 3x3 and random 4x4") {
    // det A * det A^{hat i, hat j}_{hat k, hat l} + det A^{hat i}_{hat l} det A^{hat j}_{hat k}
    //   = det A^{hat i}_{hat k} det A^{hat j}_{hat l}
    auto run = [](const PolyMatrix& a, int i, int j, int k, int l) {
        int m = a.n();
        auto rows_without = [&](int r) {
            std::vector<int> v;
            for (int x = 1; x <= m; ++x)
                if (x != r) v.push_back(x);
            return v;
        };
        auto cols_without = [&](int c) { return rows_without(c); };
        std::vector<int> rkl, cij;
        for (int x = 1; x <= m; ++x) {
            if (x != k && x != l) rkl.push_back(x);
            if (x != i && x != j) cij.push_back(x);
        }
        auto all = interval(1, m);
        Polynomial lhs = det_exact(a) * det_exact(a.submatrix(rkl, cij)) +
                         det_exact(a.submatrix(rows_without(l), cols_without(i))) *
                             det_exact(a.submatrix(rows_without(k), cols_without(j)));
        Polynomial rhs = det_exact(a.submatrix(rows_without(k), cols_without(i))) *
                         det_exact(a.submatrix(rows_without(l), cols_without(j)));
        return lhs == rhs;
    };
    PolyMatrix a3 = symbolic_u_poly(3);
    CHECK(run(a3, 1, 3, 1, 3));
    CHECK(run(a3, 1, 2, 2, 3));
    Rng rng(42);
    for (int it = 0; it < 50; ++it) {
        PolyMatrix a(4, Polynomial::zero(1));
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                a.at(i, j) = Polynomial::constant(1, rng.small_int());
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int k = 1; k <= 3; ++k)
                    for (int l = k + 1; l <= 4; ++l) CHECK(run(a, i, j, k, l));
    }
    // Fully symbolic 4x4 over all index choices.
    PolyMatrix a4 = symbolic_u_poly(4);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = k + 1; l <= 4; ++l) CHECK(run(a4, i, j, k, l));
}

TEST_CASE("det is multiplicative on random 3x3 rational-function matrices") {
    Rng rng(7);
    for (int it = 0; it < 5; ++it) {
        RFMatrix m = random_rf_matrix(rng, 3, 4);
        RFMatrix n = random_rf_matrix(rng, 3, 4);
        CHECK(det_exact(m * n) == det_exact(m) * det_exact(n));
    }
}

TEST_CASE("fraction-free path agrees with cofactor path at 4x4") {
    Rng rng(11);
    RFMatrix m = random_rf_matrix(rng, 4, 4);
    // Expand via the generic field elimination as an independent route.
    RationalFunction ff = det_exact(m);
    RationalFunction field = det_field(m);
    CHECK(ff == field);
}

TEST_CASE("substitute_matrix is a ring homomorphism; identity substitution") {
    Rng rng(13);
    unsigned nv = 9;
    RFMatrix u = symbolic_u(3);
    for (int it = 0; it < 10; ++it) {
        RationalFunction f(random_small_poly(rng, nv, 4, 2));
        RationalFunction g(random_small_poly(rng, nv, 4, 2));
        RFMatrix m = random_rf_matrix(rng, 3, nv);
        CHECK(substitute_matrix(f + g, m) == substitute_matrix(f, m) + substitute_matrix(g, m));
        CHECK(substitute_matrix(f * g, m) == substitute_matrix(f, m) * substitute_matrix(g, m));
        CHECK(substitute_matrix(f, u) == f);  // identity substitution
    }
    // f = u_12 at the identity matrix -> 0.
    RFMatrix id = RFMatrix::identity(3, RationalFunction(Polynomial::zero(nv)));
    CHECK(substitute_matrix(RationalFunction::variable(nv, uvar(3, 1, 2)), id).is_zero());
    // A substituted denominator that collapses to the zero function raises.
    RationalFunction inv_u12(Polynomial::constant(nv, 1), Polynomial::variable(nv, uvar(3, 1, 2)));
    CHECK_THROWS_AS(substitute_matrix(inv_u12, id), DenominatorVanishesError);
}

TEST_CASE("rational function invariants and evaluation") {
    unsigned nv = 9;
    auto u33 = Polynomial::variable(nv, uvar(3, 3, 3));
    RationalFunction f(Polynomial::constant(nv, 1), u33);
    // d(1/u33)/du33 = -1/u33^2
    auto d = f.derivative(uvar(3, 3, 3));
    RationalFunction want(Polynomial::constant(nv, -1), u33 * u33);
    CHECK(d == want);

    // evaluate u_12/u_22 at u_12=3, u_22=2 -> 3/2; pole detection.
    RationalFunction g(Polynomial::variable(nv, uvar(3, 1, 2)),
                       Polynomial::variable(nv, uvar(3, 2, 2)));
    std::vector<Rational> pt(nv, Rational(1));
    pt[uvar(3, 1, 2)] = 3;
    pt[uvar(3, 2, 2)] = 2;
    CHECK(g.eval(pt) == Rational(3, 2));
    pt[uvar(3, 2, 2)] = 0;
    CHECK_THROWS_AS(g.eval(pt), PoleAtPointError);
}

TEST_CASE("factored reduction cancels minors") {
    // (u11^2 - u12^2)/(u11 - u12) reduces to a polynomial.
    unsigned nv = 4;
    auto a = Polynomial::variable(nv, 0);
    auto b = Polynomial::variable(nv, 1);
    RationalFunction f(a * a - b * b, a - b);
    CHECK(f.is_polynomial());
    CHECK(f.numerator() == a + b);
    // u11 / u22 stays a genuine fraction.
    RationalFunction g(a, b);
    CHECK(!g.is_polynomial());
    CHECK_THROWS_AS(g.to_polynomial(), NotPolynomialError);
}

TEST_CASE("gradient-matrix convention: grad(tr U) = I") {
    // The gradient matrix puts df/du_ij at position (j,i); for tr U this is
    // the identity. Exercised through the derivative of the trace polynomial.
    int n = 3;
    unsigned nv = 9;
    Polynomial tr = Polynomial::zero(nv);
    for (int i = 1; i <= n; ++i) tr += Polynomial::variable(nv, uvar(3, (unsigned)i, (unsigned)i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Polynomial d = tr.derivative(uvar(3, (unsigned)i, (unsigned)j));
            CHECK(d == (i == j ? Polynomial::constant(nv, 1) : Polynomial::zero(nv)));
        }
}
