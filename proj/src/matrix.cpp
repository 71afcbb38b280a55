#include "gcl/matrix.hpp"

#include <algorithm>

namespace gcl {

std::vector<int> interval(int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
}

std::string matrix_to_text(const RFMatrix& m) {
    std::string out;
    unsigned n = (unsigned)m.n();
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = 1; j <= m.n(); ++j) {
            if (j > 1) out += "  |  ";
            out += m.at(i, j).to_string(n);
        }
        out += "\n";
    }
    return out;
}

RFMatrix symbolic_u(int n) {
    unsigned nv = (unsigned)n * n;
    RFMatrix m(n, RationalFunction(Polynomial::zero(nv)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = RationalFunction::variable(nv, uvar((unsigned)n, (unsigned)i, (unsigned)j));
    return m;
}

PolyMatrix symbolic_u_poly(int n) {
    unsigned nv = (unsigned)n * n;
    PolyMatrix m(n, Polynomial::zero(nv));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = Polynomial::variable(nv, uvar((unsigned)n, (unsigned)i, (unsigned)j));
    return m;
}

Polynomial det_bareiss(Matrix<Polynomial> m) {
    int n = m.n();
    unsigned nv = n ? m.proto().nvars() : 0;
    if (n == 0) return Polynomial::constant(0, 1);
    if (n == 1) return m.at(1, 1);
    Polynomial prev = Polynomial::constant(nv, 1);
    int sign = 1;
    for (int k = 1; k < n; ++k) {
        // Pivot: prefer the shortest nonzero polynomial in the column.
        int piv = 0;
        size_t best = SIZE_MAX;
        for (int r = k; r <= n; ++r) {
            if (m.at(r, k).is_zero()) continue;
            if (m.at(r, k).term_count() < best) {
                best = m.at(r, k).term_count();
                piv = r;
            }
        }
        if (!piv) return Polynomial::zero(nv);
        if (piv != k) {
            for (int j = 1; j <= n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i)
            for (int j = k + 1; j <= n; ++j) {
                Polynomial t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                auto q = t.exact_divide(prev);
                if (!q) throw GclError("Bareiss division not exact (internal)");
                m.at(i, j) = std::move(*q);
            }
        prev = m.at(k, k);
    }
    Polynomial d = m.at(n, n);
    return sign < 0 ? -d : d;
}

Polynomial det_exact(const PolyMatrix& m) { return det_bareiss(m); }

Rational det_exact(const PointMatrix& m) { return det_field(m); }
Dual det_exact(const DualMatrix& m) { return det_field(m); }

namespace {

RationalFunction det_cofactor(const RFMatrix& m) {
    int n = m.n();
    if (n == 0) return RationalFunction(Polynomial::constant(0, 1));
    if (n == 1) return m.at(1, 1);
    if (n == 2) return m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
    RationalFunction acc = sc_zero(m.proto());
    std::vector<int> rows = interval(2, n);
    for (int j = 1; j <= n; ++j) {
        if (m.at(1, j).is_zero()) continue;
        std::vector<int> cols;
        for (int c = 1; c <= n; ++c)
            if (c != j) cols.push_back(c);
        RationalFunction sub = det_cofactor(m.submatrix(rows, cols));
        RationalFunction term = m.at(1, j) * sub;
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

RationalFunction det_exact(const RFMatrix& m) {
    int n = m.n();
    if (n <= 3) return det_cofactor(m);
    unsigned nv = m.proto().nvars();
    // Clear each row by its factored common denominator, then run the
    // fraction-free elimination over the polynomial ring.
    PolyMatrix p(n, Polynomial::zero(nv));
    std::vector<RationalFunction::Factor> cleared;
    for (int i = 1; i <= n; ++i) {
        // Union (max exponent) of the row's denominator factors.
        std::vector<RationalFunction::Factor> row;
        for (int j = 1; j <= n; ++j)
            for (const auto& f : m.at(i, j).den_factors()) {
                bool merged = false;
                for (auto& g : row)
                    if (Polynomial::cmp(g.p, f.p) == 0) {
                        g.e = std::max(g.e, f.e);
                        merged = true;
                        break;
                    }
                if (!merged) row.push_back(f);
            }
        for (int j = 1; j <= n; ++j) {
            Polynomial entry = m.at(i, j).numerator();
            for (const auto& g : row) {
                int have = 0;
                for (const auto& f : m.at(i, j).den_factors())
                    if (Polynomial::cmp(g.p, f.p) == 0) have = f.e;
                for (int k = 0; k < g.e - have; ++k) entry = entry * g.p;
            }
            p.at(i, j) = std::move(entry);
        }
        cleared.insert(cleared.end(), row.begin(), row.end());
    }
    return rf_with_factored_den(det_bareiss(std::move(p)), std::move(cleared));
}

}  // namespace gcl
