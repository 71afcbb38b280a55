#include "gcl/cluster.hpp"

#include <algorithm>
#include <sstream>

namespace gcl {

std::string VarName::str() const {
    switch (kind) {
        case H: return "h_" + std::to_string(i) + "_" + std::to_string(j);
        case Gg: return "g_" + std::to_string(i) + "_" + std::to_string(j);
        case Phi: return "phi_" + std::to_string(i) + "_" + std::to_string(j);
        case C: return "c_" + std::to_string(i);
    }
    return "?";
}

std::optional<VarName> parse_var_name(const std::string& s) {
    auto split = [](const std::string& str) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : str) {
            if (c == '_') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur.push_back(c);
        }
        parts.push_back(cur);
        return parts;
    };
    auto parts = split(s);
    try {
        if (parts.size() == 2 && parts[0] == "c") return VarName{VarName::C, std::stoi(parts[1]), 0};
        if (parts.size() == 3) {
            int i = std::stoi(parts[1]), j = std::stoi(parts[2]);
            if (parts[0] == "h") return VarName{VarName::H, i, j};
            if (parts[0] == "g") return VarName{VarName::Gg, i, j};
            if (parts[0] == "phi") return VarName{VarName::Phi, i, j};
        }
    } catch (...) {
    }
    return std::nullopt;
}

int h_sign_exponent(int i, int j, int n) { return h_sign_exponent_impl(i, j, n); }

int h_degree_formula(const BDTriple& t, int i, int j) {
    if (i == 1 && j == 1) return t.n();
    auto [si, pos] = t.string_position(i - 1);
    const auto& roots = t.gamma_strings()[(size_t)si].roots;
    int d = t.n() - j + 1;
    for (size_t k = (size_t)pos + 1; k < roots.size(); ++k) d += t.n() - roots[k];
    return d;
}

int phi_degree_formula(int n, int k, int l) {
    return l - 1 + (n - k - l + 1) * (n - k - l + 2) / 2;
}

int InitialSeed::index_of(const VarName& v) const {
    for (size_t k = 0; k < vars.size(); ++k)
        if (vars[k].name == v) return (int)k;
    return -1;
}

int InitialSeed::index_of(const std::string& name) const {
    auto v = parse_var_name(name);
    return v ? index_of(*v) : -1;
}

const NamedFunction& InitialSeed::by_name(const std::string& name) const {
    int k = index_of(name);
    if (k < 0) throw GclError("unknown variable: " + name);
    return vars[(size_t)k];
}

int InitialSeed::resolve_h_like(int i, int j) const {
    VarName::Kind main = conv == Convention::H ? VarName::H : VarName::Gg;
    if (conv == Convention::H) {
        if (i == 1 && j >= 2 && j <= n) return index_of(VarName{VarName::Phi, j - 1, n - j + 1});
        if (j == n + 1) {
            if (triple.in_gamma2(i - 1)) {
                int jj = triple.gamma_star_of(i - 1) + 1;
                return index_of(VarName{main, jj, jj});
            }
            return -2;  // the constant 1
        }
    }
    return index_of(VarName{main, i, j});
}

InitialSeed initial_seed(const BDTriple& t, Convention conv, Group group, int symbolic_cap) {
    int n = t.n();
    InitialSeed seed;
    seed.triple = t;
    seed.conv = conv;
    seed.group = group;
    seed.n = n;

    RFMatrix u = symbolic_u(n);
    bool via_f = n <= symbolic_cap;

    // Main-family values. Below the symbolic cap the defining F / F^op route
    // constructs the polynomials (the reduction is the regularity witness);
    // above it the explicit minor expansion does, and the F-route is checked
    // at random points by the verification suites.
    RFMatrix fmat(0, RationalFunction(Polynomial::zero(0)));
    if (via_f) fmat = conv == Convention::H ? f_map(t, u) : f_op_map(t, u);

    auto main_value = [&](int i, int j) -> Polynomial {
        VarName vn{conv == Convention::H ? VarName::H : VarName::Gg, i, j};
        if (conv == Convention::H) {
            RationalFunction v =
                via_f ? h_value_from_f(t, i, j, u, fmat) : h_explicit_value(t, i, j, u);
            return v.to_polynomial(vn.str());
        }
        if (via_f) {
            RationalFunction v = g_value_from_fop(t, i, j, u, fmat);
            return v.to_polynomial(vn.str());
        }
        // g_ij(U) = (-1)^{(i-j)(n-j)} h_ji(U^T) for the opposite triple.
        RationalFunction v = h_explicit_value(t.opposite(), j, i, u.transpose());
        Polynomial p = v.to_polynomial(vn.str());
        return h_sign_exponent(j, i, n) % 2 == 0 ? p : -p;
    };

    std::vector<NamedFunction> all;
    for (int i = 1; i <= n - 1; ++i) {
        NamedFunction f;
        f.name = {VarName::C, i, 0};
        f.value = c_value(n, i, u).to_polynomial(f.name.str());
        f.frozen = true;
        f.degree = i;
        all.push_back(std::move(f));
    }
    for (int k = 1; k <= n - 1; ++k)
        for (int l = 1; k + l <= n; ++l) {
            NamedFunction f;
            f.name = {VarName::Phi, k, l};
            RationalFunction v =
                conv == Convention::H ? phi_value(n, k, l, u) : phi_g_value(n, k, l, u);
            f.value = v.to_polynomial(f.name.str());
            f.frozen = false;
            f.degree = phi_degree_formula(n, k, l);
            if (k == 1 && l == 1) {
                f.mult = n;
                f.pstring.resize((size_t)n + 1);
                for (int r = 1; r <= n - 1; ++r)
                    f.pstring[(size_t)r].exp[VarName{VarName::C, r, 0}.str()] = 1;
            } else {
                f.pstring.resize(2);
            }
            all.push_back(std::move(f));
        }
    // h (or g) family: diagonal corner first index 1 only for h_11/g_11.
    const std::set<int>& frozen_roots = conv == Convention::H ? t.gamma2() : t.gamma1();
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            if (a == 1 && b > 1) continue;
            int i = conv == Convention::H ? a : b;
            int j = conv == Convention::H ? b : a;
            if (a == 1 && group == Group::SL) continue;  // h_11/g_11 absent on SL_n
            NamedFunction f;
            f.name = {conv == Convention::H ? VarName::H : VarName::Gg, i, j};
            if (a == 1) {
                f.value = det_exact(u).to_polynomial(f.name.str());
                f.frozen = true;
                f.degree = n;
            } else {
                f.value = main_value(i, j);
                int diag_root = a - 1;
                f.frozen = (a == b) && !frozen_roots.count(diag_root);
                f.degree = conv == Convention::H ? h_degree_formula(t, i, j)
                                                 : h_degree_formula(t.opposite(), j, i);
            }
            if (!f.frozen) f.pstring.resize(2);
            if ((int)f.value.total_degree() != f.degree)
                throw GclError("degree formula mismatch for " + f.name.str());
            all.push_back(std::move(f));
        }

    std::stable_sort(all.begin(), all.end(), [](const NamedFunction& x, const NamedFunction& y) {
        if (x.frozen != y.frozen) return !x.frozen;
        return x.name < y.name;
    });
    seed.vars = std::move(all);
    seed.n_mutable = 0;
    for (auto& f : seed.vars) seed.n_mutable += f.frozen ? 0 : 1;
    return seed;
}

}  // namespace gcl
