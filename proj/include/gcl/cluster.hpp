#pragma once

#include <string>

#include "gcl/maps.hpp"

namespace gcl {

enum class Convention { H, G };
enum class Group { GL, SL };

struct VarName {
    enum Kind { H = 0, Gg = 1, Phi = 2, C = 3 } kind;
    int i = 0, j = 0;  // c-functions use i only

    std::string str() const;
    bool operator==(const VarName& o) const { return kind == o.kind && i == o.i && j == o.j; }
    bool operator<(const VarName& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};
std::optional<VarName> parse_var_name(const std::string& s);

// ---- value-level constructors, templated over the scalar ----

// phi_kl(U) = s_kl det [ (U^0)^{[n-k+1,n]} | U^{[n-l+1,n]} | (U^2)^{{n}} | ... ]
template <class S>
S phi_value(int n, int k, int l, const Matrix<S>& u);

// g-convention phi: columns anchored at the first rows/column instead.
template <class S>
S phi_g_value(int n, int k, int l, const Matrix<S>& u);

// c_i(U): the lambda^i coefficient of det(I + lambda U) divided by
// s_i = (-1)^{i(n-1)}; equals s_i * (sum of principal i x i minors).
template <class S>
S c_value(int n, int i, const Matrix<S>& u);

// h_{ij}(U) from the F-route; fmat must be f_map(t, U).
template <class S>
S h_value_from_f(const BDTriple& t, int i, int j, const Matrix<S>& u, const Matrix<S>& fmat);

// h_{ij}(U) by the explicit minor expansion (the independent oracle).
template <class S>
S h_explicit_value(const BDTriple& t, int i, int j, const Matrix<S>& u);

// g_{ij}(U) from the F^op-route; fop must be f_op_map(t, U).
template <class S>
S g_value_from_fop(const BDTriple& t, int i, int j, const Matrix<S>& u, const Matrix<S>& fop);

int h_sign_exponent(int i, int j, int n);  // epsilon_ij = (j-i)(n-i)

// Degree of h_{alpha_pos+1, j} per the closed formula
// n-j+1 + sum_{l=1}^{m-pos} (n - alpha_{pos+l}).
int h_degree_formula(const BDTriple& t, int i, int j);
int phi_degree_formula(int n, int k, int l);

// ---- the initial extended seed ----

struct FrozenMonomial {
    // exponents of frozen variables by name; empty product means 1
    std::map<std::string, int> exp;
};

struct NamedFunction {
    VarName name;
    Polynomial value;
    bool frozen = false;
    int mult = 1;
    std::vector<FrozenMonomial> pstring;  // size mult + 1, ends are 1
    int degree = 0;
};

struct InitialSeed {
    InitialSeed() : triple(BDTriple::validate(2, {})) {}
    BDTriple triple;
    Convention conv = Convention::H;
    Group group = Group::GL;
    int n = 0;
    std::vector<NamedFunction> vars;  // mutable block first, then frozen block
    int n_mutable = 0;

    int index_of(const VarName& v) const;  // -1 when absent
    int index_of(const std::string& name) const;
    const NamedFunction& by_name(const std::string& name) const;

    // Out-of-range conventions: h_{1j} resolves to phi_{j-1,n-j+1};
    // h_{i,n+1} resolves to h_{jj} with j = gamma^*(i-1)+1 when i-1 is in
    // Gamma2 and to the constant 1 otherwise. Returns the variable index, or
    // -2 for the constant 1, or -1 if genuinely unknown.
    int resolve_h_like(int i, int j) const;
};

// symbolic_cap: build values symbolically through the F-route for
// n <= symbolic_cap; for larger n the explicit expansion constructs the
// polynomials and the F-route is checked separately at random points.
InitialSeed initial_seed(const BDTriple& t, Convention conv, Group group, int symbolic_cap = 4);

// ---- template implementations ----

template <class S>
S phi_value(int n, int k, int l, const Matrix<S>& u) {
    assert(k >= 1 && l >= 1 && k + l <= n);
    // Assemble the n x n column matrix.
    Matrix<S> m(n, sc_zero(u.proto()));
    int col = 0;
    for (int c = n - k + 1; c <= n; ++c) {  // identity columns
        ++col;
        for (int r = 1; r <= n; ++r) m.at(r, col) = r == c ? sc_one(u.proto()) : sc_zero(u.proto());
    }
    for (int c = n - l + 1; c <= n; ++c) {
        ++col;
        for (int r = 1; r <= n; ++r) m.at(r, col) = u.at(r, c);
    }
    Matrix<S> power = u;
    for (int p = 2; p <= n - k - l + 1; ++p) {
        power = power * u;
        ++col;
        for (int r = 1; r <= n; ++r) m.at(r, col) = power.at(r, n);
    }
    assert(col == n);
    S d = det_exact(m);
    int s_exp = (n % 2 == 0) ? k * (l + 1) : (n - 1) / 2 + k * (k - 1) / 2 + l * (l - 1) / 2;
    return s_exp % 2 == 0 ? d : -d;
}

template <class S>
S phi_g_value(int n, int k, int l, const Matrix<S>& u) {
    assert(k >= 1 && l >= 1 && k + l <= n);
    Matrix<S> m(n, sc_zero(u.proto()));
    int col = 0;
    for (int c = 1; c <= k; ++c) {
        ++col;
        for (int r = 1; r <= n; ++r) m.at(r, col) = r == c ? sc_one(u.proto()) : sc_zero(u.proto());
    }
    for (int c = 1; c <= l; ++c) {
        ++col;
        for (int r = 1; r <= n; ++r) m.at(r, col) = u.at(r, c);
    }
    Matrix<S> power = u;
    for (int p = 2; p <= n - k - l + 1; ++p) {
        power = power * u;
        ++col;
        for (int r = 1; r <= n; ++r) m.at(r, col) = power.at(r, 1);
    }
    assert(col == n);
    S d = det_exact(m);
    int s_exp = (n % 2 == 0) ? k * (l + 1) : (n - 1) / 2 + k * (k - 1) / 2 + l * (l - 1) / 2;
    return s_exp % 2 == 0 ? d : -d;
}

template <class S>
S c_value(int n, int i, const Matrix<S>& u) {
    assert(0 <= i && i <= n);
    if (i == 0) return sc_one(u.proto());
    S acc = sc_zero(u.proto());
    // Sum of principal i x i minors.
    std::vector<int> idx((size_t)i);
    for (int k = 0; k < i; ++k) idx[(size_t)k] = k + 1;
    for (;;) {
        acc += minor_det(u, idx, idx);
        int pos = i - 1;
        while (pos >= 0 && idx[(size_t)pos] == n - (i - 1 - pos)) --pos;
        if (pos < 0) break;
        ++idx[(size_t)pos];
        for (int k = pos + 1; k < i; ++k) idx[(size_t)k] = idx[(size_t)k - 1] + 1;
    }
    return (i * (n - 1)) % 2 == 0 ? acc : -acc;
}

inline int h_sign_exponent_impl(int i, int j, int n) { return (j - i) * (n - i); }

template <class S>
S h_value_from_f(const BDTriple& t, int i, int j, const Matrix<S>& u, const Matrix<S>& fmat) {
    int n = t.n();
    if (i == 1 && j == 1) return det_exact(u);
    assert(2 <= i && i <= j && j <= n);
    auto [si, pos] = t.string_position(i - 1);
    const auto& roots = t.gamma_strings()[(size_t)si].roots;
    S val = minor_det(fmat, interval(i, n - j + i), interval(j, n));
    if (h_sign_exponent_impl(i, j, n) % 2 != 0) val = -val;
    for (size_t k = (size_t)pos + 1; k < roots.size(); ++k) {
        int a = roots[k] + 1;
        val = val * minor_det(fmat, interval(a, n), interval(a, n));
    }
    return val;
}

template <class S>
S g_value_from_fop(const BDTriple& t, int i, int j, const Matrix<S>& u, const Matrix<S>& fop) {
    int n = t.n();
    if (i == 1 && j == 1) return det_exact(u);
    assert(2 <= j && j <= i && i <= n);
    // gamma^*-strings are the gamma-strings of the opposite triple.
    auto opp = t.opposite();
    auto [si, pos] = opp.string_position(j - 1);
    const auto& roots = opp.gamma_strings()[(size_t)si].roots;
    S val = minor_det(fop, interval(i, n), interval(j, n - i + j));
    for (size_t k = (size_t)pos + 1; k < roots.size(); ++k) {
        int a = roots[k] + 1;
        val = val * minor_det(fop, interval(a, n), interval(a, n));
    }
    return val;
}

template <class S>
S h_explicit_value(const BDTriple& t, int i, int j, const Matrix<S>& u) {
    int n = t.n();
    if (i == 1 && j == 1) return det_exact(u);
    assert(2 <= i && i <= j && j <= n);
    auto [si, pos] = t.string_position(i - 1);
    const auto& roots = t.gamma_strings()[(size_t)si].roots;
    int m = (int)roots.size() - 1;
    int s_head = n - j + roots[(size_t)pos] + 1;

    // Levels pos..m-1 choose index subsets; the data below is per level.
    struct Level {
        std::vector<int> pool;   // the truncated run Delta^{<=}(bound)
        int choose = 0;          // subset size
        bool positive = true;    // orientation of the run at this level
        std::vector<int> kset;   // K-rows restricted by the bound (head only)
    };
    std::vector<Level> lv;
    for (int tpos = pos; tpos < m; ++tpos) {
        int a = roots[(size_t)tpos];
        const Run& run = t.xruns()[(size_t)t.xrun_of(a)];
        int bound = tpos == pos ? s_head : n;
        Level L;
        for (int x = run.a; x <= std::min(run.b, bound); ++x) L.pool.push_back(x);
        int lo = a + 1, hi = std::min({run.b, bound});
        L.choose = hi >= lo ? hi - lo + 1 : 0;
        L.positive = run.orient == Orientation::Positive;
        int kstart = BDTriple::plus_closure(a, t.gamma1(), n) + 1;
        int kend = tpos == pos ? std::min(n, s_head) : n;
        for (int x = kstart; x <= kend; ++x) L.kset.push_back(x);
        lv.push_back(std::move(L));
    }

    S total = sc_zero(u.proto());
    // Iterate over all tuples (I_pos, ..., I_{m-1}) by odometer over subsets.
    size_t nlv = lv.size();
    std::vector<std::vector<int>> subset_sel(nlv);  // positions into pool
    for (size_t k = 0; k < nlv; ++k) {
        subset_sel[k].resize((size_t)lv[k].choose);
        for (int x = 0; x < lv[k].choose; ++x) subset_sel[k][(size_t)x] = x;
    }
    auto advance = [&](size_t k) -> bool {
        auto& sel = subset_sel[k];
        int npool = (int)lv[k].pool.size();
        int c = (int)sel.size();
        int posn = c - 1;
        while (posn >= 0 && sel[(size_t)posn] == npool - (c - posn)) --posn;
        if (posn < 0) return false;
        ++sel[(size_t)posn];
        for (int x = posn + 1; x < c; ++x) sel[(size_t)x] = sel[(size_t)x - 1] + 1;
        return true;
    };
    if (nlv == 0) {
        // pos == m: single trailing minor.
        S val = minor_det(u, interval(roots[(size_t)m] + 1, s_head), interval(j, n));
        return h_sign_exponent_impl(i, j, n) % 2 == 0 ? val : -val;
    }
    for (;;) {
        // Assemble the product for the current tuple.
        std::vector<std::vector<int>> isets(nlv);
        for (size_t k = 0; k < nlv; ++k)
            for (int p : subset_sel[k]) isets[k].push_back(lv[k].pool[(size_t)p]);
        S prod = sc_one(u.proto());
        {
            // Head factor: rows I_pos cup K_pos^{<=}(s_head), cols [j, n].
            std::vector<int> rows = isets[0];
            rows.insert(rows.end(), lv[0].kset.begin(), lv[0].kset.end());
            std::sort(rows.begin(), rows.end());
            prod = prod * minor_det(u, rows, interval(j, n));
        }
        for (size_t k = 0; k < nlv; ++k) {
            // Transition out of level k: columns check-gamma<I_k> cup L.
            int a_next = roots[(size_t)(pos + (int)k + 1)];
            std::vector<int> cols;
            if (lv[k].positive) {
                for (int x : isets[k]) cols.push_back(t.bar_gamma(x));
                int top = t.bar_gamma(lv[k].pool.back());
                for (int c = top + 1; c <= n; ++c) cols.push_back(c);
            } else {
                std::set<int> in(isets[k].begin(), isets[k].end());
                for (int x : lv[k].pool)
                    if (!in.count(x)) cols.push_back(t.bar_gamma(x));
                int ystop = BDTriple::plus_closure(a_next, t.gamma2(), n);
                for (int c = ystop + 1; c <= n; ++c) cols.push_back(c);
            }
            std::sort(cols.begin(), cols.end());
            std::vector<int> rows;
            if (k + 1 < nlv) {
                rows = isets[k + 1];
                for (int x = BDTriple::plus_closure(roots[(size_t)(pos + (int)k + 1)], t.gamma1(), n) + 1;
                     x <= n; ++x)
                    rows.push_back(x);
                std::sort(rows.begin(), rows.end());
            } else {
                rows = interval(roots[(size_t)m] + 1, n);
            }
            prod = prod * minor_det(u, rows, cols);
        }
        total += prod;
        // Odometer.
        size_t k = nlv;
        for (;;) {
            if (k == 0) goto done;
            --k;
            if (advance(k)) break;
            for (int x = 0; x < lv[k].choose; ++x) subset_sel[k][(size_t)x] = x;
        }
    }
done:
    return h_sign_exponent_impl(i, j, n) % 2 == 0 ? total : -total;
}

}  // namespace gcl
