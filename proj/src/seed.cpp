#include "gcl/seed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gcl/linsolve.hpp"

namespace gcl {

void ExchangeMatrix::check_invariants() const {
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            // D B skew-symmetric with D = diag(1/d_i).
            if (at(i, j) * mult[(size_t)j] != -at(j, i) * mult[(size_t)i])
                throw GclError("exchange matrix not skew-symmetrizable");
        }
        long long g = 0;
        for (int j = 0; j < N; ++j) g = std::gcd(g, at(i, j));
        if (g % mult[(size_t)i] != 0 && g != 0)
            throw GclError("multiplicity does not divide its row gcd");
    }
}

int Seed::index_of(const std::string& name) const {
    auto v = parse_var_name(name);
    return v ? index_of(*v) : -1;
}
int Seed::index_of(const VarName& v) const {
    for (size_t k = 0; k < names.size(); ++k)
        if (names[k] == v) return (int)k;
    return -1;
}

Seed make_seed(const InitialSeed& init, ExchangeMatrix B) {
    Seed s;
    for (const auto& f : init.vars) {
        s.names.push_back(f.name);
        s.frozen.push_back(f.frozen);
        s.values.push_back(RationalFunction(f.value));
        s.strings.push_back(f.pstring);
    }
    s.B = std::move(B);
    s.B.check_invariants();
    return s;
}

RationalFunction y_variable(const Seed& s, int k) {
    assert(!s.frozen[(size_t)k]);
    RationalFunction num = sc_one(s.values[0]);
    RationalFunction den = sc_one(s.values[0]);
    for (int j = 0; j < s.total(); ++j) {
        long long e = s.B.at(k, j);
        for (long long c = 0; c < std::llabs(e); ++c)
            (e > 0 ? num : den) *= s.values[(size_t)j];
    }
    return num / den;
}

Rational y_value_at(const Seed& s, int k, const PointMatrix& p) {
    std::vector<Rational> pt;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.n(); ++j) pt.push_back(p.at(i, j));
    Rational acc(1);
    for (int j = 0; j < s.total(); ++j) {
        long long e = s.B.at(k, j);
        if (!e) continue;
        Rational v = s.values[(size_t)j].eval(pt);
        if (v == 0) throw PoleAtPointError();
        acc *= rat_pow(v, e);
    }
    return acc;
}

namespace {

RationalFunction frozen_monomial_value(const Seed& s, const FrozenMonomial& m) {
    RationalFunction acc = sc_one(s.values[0]);
    for (auto& [name, e] : m.exp) {
        int idx = s.index_of(name);
        if (idx < 0) throw GclError("string references unknown variable " + name);
        for (int c = 0; c < e; ++c) acc *= s.values[(size_t)idx];
    }
    return acc;
}

}  // namespace

Seed mutate(const Seed& s, int k, bool require_regular) {
    assert(k >= 0 && k < s.total() && !s.frozen[(size_t)k]);
    int d = s.B.mult[(size_t)k];
    const RationalFunction one = sc_one(s.values[0]);

    // Cluster tau-monomials u_{k;>}, u_{k;<} (exponents b_ki / d).
    RationalFunction ugt = one, ult = one;
    for (int i = 0; i < s.B.N; ++i) {
        long long e = s.B.at(k, i);
        if (!e) continue;
        if (e % d != 0) throw GclError("mutable-block entry not divisible by the multiplicity");
        RationalFunction& dst = e > 0 ? ugt : ult;
        for (long long c = 0; c < std::llabs(e) / d; ++c) dst *= s.values[(size_t)i];
    }
    // Stable tau-monomials per r.
    auto stable = [&](int r, bool positive) {
        RationalFunction acc = one;
        for (int i = s.B.N; i < s.total(); ++i) {
            long long e = s.B.at(k, i);
            if ((e > 0) != positive || e == 0) continue;
            long long expo = std::llabs((long long)r * e) / d;  // floor(r|e|/d)
            for (long long c = 0; c < expo; ++c) acc *= s.values[(size_t)i];
        }
        return acc;
    };

    RationalFunction sum = sc_zero(s.values[0]);
    for (int r = 0; r <= d; ++r) {
        RationalFunction term = frozen_monomial_value(s, s.strings[(size_t)k].at((size_t)r));
        for (int c = 0; c < r; ++c) term *= ugt;
        for (int c = 0; c < d - r; ++c) term *= ult;
        term *= stable(r, true) * stable(d - r, false);
        sum += term;
    }
    RationalFunction xnew = sum / s.values[(size_t)k];
    if (require_regular) xnew = RationalFunction(xnew.to_polynomial(s.names[(size_t)k].str() + "'"));

    Seed out = s;
    out.values[(size_t)k] = std::move(xnew);
    // Exchange matrix mutation.
    for (int i = 0; i < s.B.N; ++i)
        for (int j = 0; j < s.total(); ++j) {
            if (i == k || j == k) {
                out.B.b[(size_t)i][(size_t)j] = -s.B.at(i, j);
            } else {
                long long bik = s.B.at(i, k), bkj = s.B.at(k, j);
                out.B.b[(size_t)i][(size_t)j] =
                    s.B.at(i, j) + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
            }
        }
    // String reversal in direction k.
    auto& ps = out.strings[(size_t)k];
    std::reverse(ps.begin(), ps.end());
    out.history.push_back(s.names[(size_t)k].str());
    // Involutivity of the matrix rule (cheap integer check).
#ifndef NDEBUG
    {
        Seed back = out;
        for (int i = 0; i < s.B.N; ++i)
            for (int j = 0; j < s.total(); ++j) {
                if (i == k || j == k) {
                    back.B.b[(size_t)i][(size_t)j] = -out.B.at(i, j);
                } else {
                    long long bik = out.B.at(i, k), bkj = out.B.at(k, j);
                    back.B.b[(size_t)i][(size_t)j] =
                        out.B.at(i, j) + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
                }
            }
        assert(back.B.b == s.B.b);
    }
#endif
    return out;
}

Seed mutate_sequence(Seed s, const std::vector<std::string>& names, bool require_regular) {
    for (const auto& nm : names) {
        int k = s.index_of(nm);
        if (k < 0) throw GclError("mutate_sequence: unknown variable " + nm);
        s = mutate(s, k, require_regular);
    }
    return s;
}

std::vector<std::map<int, long long>> hatted_string(const Seed& s, int k) {
    int d = s.B.mult[(size_t)k];
    // q_{kr} = v_>^r v_<^{d-r} / (v^{[r]}_> v^{[d-r]}_<)^d as exponent maps;
    // p-hat_{kr} = p_{kr}^d / q_{kr}.
    std::vector<std::map<int, long long>> out((size_t)d + 1);
    for (int r = 0; r <= d; ++r) {
        std::map<int, long long> expo;
        for (int i = s.B.N; i < s.total(); ++i) {
            long long e = s.B.at(k, i);
            if (!e) continue;
            long long mag = std::llabs(e);
            long long full = e > 0 ? (long long)r * mag : (long long)(d - r) * mag;
            long long floored = e > 0 ? ((long long)r * mag) / d : ((long long)(d - r) * mag) / d;
            long long q = full - d * floored;  // exponent of x_i in q_{kr}
            if (q) expo[i] -= q;
        }
        for (auto& [name, e] : s.strings[(size_t)k].at((size_t)r).exp) {
            int idx = s.index_of(name);
            expo[idx] += (long long)e * d;
        }
        std::erase_if(expo, [](auto& kv) { return kv.second == 0; });
        out[(size_t)r] = std::move(expo);
    }
    return out;
}

ExchangeMatrix infer_exchange_matrix(const CoefficientMatrix& omega, const InitialSeed& seed) {
    size_t total = seed.vars.size();
    assert(omega.total == total);
    // Casimir variables: zero rows of Omega. Their columns of B are set by
    // fiat (c-functions) except the determinant variable h_11/g_11, whose
    // column is recovered from the degree-0 requirement on the y-variables.
    std::vector<size_t> S;  // non-Casimir coordinates
    for (size_t i = 0; i < total; ++i)
        if (!omega.row_is_zero(i)) S.push_back(i);
    int det_idx = -1;
    {
        VarName det{seed.conv == Convention::H ? VarName::H : VarName::Gg, 1, 1};
        det_idx = seed.index_of(det);
    }

    ExchangeMatrix B;
    B.N = seed.n_mutable;
    B.M = (int)total - B.N;
    B.b.assign((size_t)B.N, std::vector<long long>(total, 0));
    for (int k = 0; k < B.N; ++k) B.mult.push_back(seed.vars[(size_t)k].mult);

    for (int k = 0; k < B.N; ++k) {
        // Solve x . Omega_SS = d_k e_k on the non-Casimir block.
        LinSystem sys;
        sys.rows = sys.cols = S.size();
        sys.a.assign(S.size() * S.size(), Rational(0));
        sys.b.assign(S.size(), Rational(0));
        for (size_t r = 0; r < S.size(); ++r)
            for (size_t c = 0; c < S.size(); ++c) sys.at(r, c) = omega.at(S[c], S[r]);  // transpose
        for (size_t r = 0; r < S.size(); ++r)
            if (S[r] == (size_t)k) sys.b[r] = seed.vars[(size_t)k].mult;
        LinSolution sol = linsolve(std::move(sys));
        if (!sol.consistent) throw InferenceError("NoIntegerSolution", (int)sol.nullity);
        if (sol.nullity > 0) throw InferenceError("NonUniqueAfterNormalization", (int)sol.nullity);
        for (size_t c = 0; c < S.size(); ++c) {
            const Rational& v = sol.x[c];
            if (!is_integer(v)) throw InferenceError("NoIntegerSolution", 0);
            B.b[(size_t)k][S[c]] = (long long)num(v);
        }
        // Degree balance pins the det-variable column.
        if (det_idx >= 0) {
            long long weighted = 0;
            for (size_t j = 0; j < total; ++j) {
                if ((int)j == det_idx) continue;
                if (seed.vars[j].name.kind == VarName::C) continue;  // weight via own degree; exponent 0 anyway
                weighted += B.b[(size_t)k][j] * seed.vars[j].degree;
            }
            if (weighted % seed.n != 0) throw InferenceError("NoIntegerSolution", 0);
            B.b[(size_t)k][(size_t)det_idx] = -weighted / seed.n;
        }
    }
    B.check_invariants();
    return B;
}

std::string check_compatibility(const CoefficientMatrix& omega, const Seed& s) {
    std::ostringstream bad;
    for (int k = 0; k < s.B.N; ++k) {
        for (size_t j = 0; j < omega.total; ++j) {
            Rational acc(0);
            for (size_t m = 0; m < omega.total; ++m)
                if (s.B.at(k, (int)m) != 0) acc += Rational(s.B.at(k, (int)m)) * omega.at(m, j);
            Rational want = (size_t)k == j ? Rational(s.B.mult[(size_t)k]) : Rational(0);
            if (acc != want) {
                bad << "{log y_" << s.names[(size_t)k].str() << ", log " << s.names[j].str()
                    << "} = " << rat_str(acc) << ", want " << rat_str(want) << "; ";
                return bad.str();
            }
        }
        // Hatted string entries must be Casimirs.
        for (auto& mono : hatted_string(s, k)) {
            for (size_t j = 0; j < omega.total; ++j) {
                Rational acc(0);
                for (auto& [idx, e] : mono) acc += Rational(e) * omega.at((size_t)idx, j);
                if (acc != 0) {
                    bad << "hatted string of " << s.names[(size_t)k].str() << " is not Casimir; ";
                    return bad.str();
                }
            }
        }
    }
    return {};
}

std::string export_quiver_dot(const Seed& s) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    // B-hat = [D B_princ, B_frozen; -B_frozen^T, 0]; isolated vertices are
    // omitted, shapes encode mutable / frozen / generalized.
    std::vector<bool> isolated(s.names.size(), true);
    for (int i = 0; i < s.B.N; ++i)
        for (int j = 0; j < s.total(); ++j)
            if (s.B.at(i, j) != 0) isolated[(size_t)i] = isolated[(size_t)j] = false;
    for (int i = 0; i < s.total(); ++i) {
        if (isolated[(size_t)i]) continue;
        std::string shape = s.frozen[(size_t)i] ? "box" : (s.B.mult[(size_t)i] > 1 ? "hexagon" : "ellipse");
        os << "  \"" << s.names[(size_t)i].str() << "\" [shape=" << shape << "];\n";
    }
    auto edge = [&](int i, int j, long long w) {
        if (w <= 0) return;
        os << "  \"" << s.names[(size_t)i].str() << "\" -> \"" << s.names[(size_t)j].str() << "\"";
        if (w > 1) os << " [label=\"" << w << "\"]";
        os << ";\n";
    };
    for (int i = 0; i < s.B.N; ++i) {
        for (int j = 0; j < s.B.N; ++j)
            if (i < j) {
                long long w = s.B.at(i, j) / s.B.mult[(size_t)i];  // D B entry
                edge(i, j, w);
                edge(j, i, -w);
            }
        for (int j = s.B.N; j < s.total(); ++j) {
            edge(i, j, s.B.at(i, j));
            edge(j, i, -s.B.at(i, j));
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_quiver_json(const Seed& s) {
    std::ostringstream os;
    os << "{\"mult\":[";
    for (int i = 0; i < s.B.N; ++i) os << (i ? "," : "") << s.B.mult[(size_t)i];
    os << "],\"names\":[";
    for (int i = 0; i < s.total(); ++i) os << (i ? "," : "") << '"' << s.names[(size_t)i].str() << '"';
    os << "],\"frozen\":[";
    for (int i = 0; i < s.total(); ++i) os << (i ? "," : "") << (s.frozen[(size_t)i] ? "true" : "false");
    os << "],\"b\":[";
    for (int i = 0; i < s.B.N; ++i) {
        os << (i ? "," : "") << "[";
        for (int j = 0; j < s.total(); ++j) os << (j ? "," : "") << s.B.at(i, j);
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace gcl
