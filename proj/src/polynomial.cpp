#include "gcl/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gcl {

int mono_cmp(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb ? -1 : 1;
    for (unsigned i = 0; i < a.nv; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

Polynomial Polynomial::constant(unsigned nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned idx) {
    assert(idx < nvars);
    Polynomial p(nvars);
    Monomial m(nvars);
    m.e[idx] = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_terms(unsigned nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    p.terms_ = std::move(terms);
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& x, const Term& y) { return mono_cmp(x.m, y.m) > 0; });
    p.normalize_sorted();
    return p;
}

Polynomial Polynomial::from_sorted_unique(unsigned nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    p.terms_ = std::move(terms);
#ifndef NDEBUG
    for (size_t i = 0; i + 1 < p.terms_.size(); ++i)
        assert(mono_cmp(p.terms_[i].m, p.terms_[i + 1].m) > 0);
    for (auto& t : p.terms_) assert(t.c != 0);
#endif
    return p;
}

void Polynomial::normalize_sorted() {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && mono_cmp(out.back().m, t.m) == 0)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Rational Polynomial::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rational(0) : terms_[0].c;
}

unsigned Polynomial::total_degree() const {
    // Terms are graded: the leading term has maximal total degree.
    return terms_.empty() ? 0u : terms_.front().m.total();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    assert(nvars_ == g.nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        int c = mono_cmp(terms_[i].m, g.terms_[j].m);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(g.terms_[j++]);
        else {
            Rational s = terms_[i].c + g.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < g.terms_.size()) r.terms_.push_back(g.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const { return poly_mul(*this, g); }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc = Polynomial::constant(nvars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (nvars_ != g.nvars_ || terms_.size() != g.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == g.terms_[i].m) || terms_[i].c != g.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::derivative(unsigned var) const {
    assert(var < nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        unsigned e = t.m.e[var];
        if (!e) continue;
        Term d{t.m, t.c * (int)e};
        d.m.e[var] = (std::uint8_t)(e - 1);
        r.terms_.push_back(std::move(d));
    }
    // Lowering one exponent preserves the descending graded-lex order only
    // within a fixed degree slice; re-sort to restore the invariant.
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return mono_cmp(x.m, y.m) > 0; });
    return r;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& g) const {
    assert(nvars_ == g.nvars_);
    assert(!g.is_zero());
    if (is_zero()) return Polynomial(nvars_);
    if (g.is_constant()) return scaled(Rational(1) / g.constant_value());
    // Cheap rejects: in a multiplicative monomial order both the leading and
    // the trailing monomial of g must divide the corresponding monomial of f.
    if (g.total_degree() > total_degree()) return std::nullopt;
    if (!g.terms_.front().m.divides(terms_.front().m)) return std::nullopt;
    if (!g.terms_.back().m.divides(terms_.back().m)) return std::nullopt;
    // Standard division by the leading term; remainder must stay divisible at
    // every step or the quotient does not exist.
    std::map<Monomial, Rational, MonoGreater> rem;
    for (const Term& t : terms_) rem.emplace(t.m, t.c);
    const Term& lg = g.leading();
    std::vector<Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lg.m.divides(it->first)) return std::nullopt;
        Term qt{it->first / lg.m, it->second / lg.c};
        for (const Term& t : g.terms_) {
            Monomial m = qt.m * t.m;
            auto [pos, fresh] = rem.emplace(m, Rational(0));
            pos->second -= qt.c * t.c;
            if (pos->second == 0) rem.erase(pos);
        }
        q.push_back(std::move(qt));
    }
    return Polynomial::from_terms(nvars_, std::move(q));
}

Rational Polynomial::content() const {
    if (is_zero()) return Rational(0);
    Int g = 0, l = 1;
    for (const Term& t : terms_) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(num(t.c)));
        l = boost::multiprecision::lcm(l, den(t.c));
    }
    Rational c(g, l);
    if (terms_.front().c < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / content());
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
    size_t k = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < k; ++i) {
        int c = mono_cmp(a.terms_[i].m, b.terms_[i].m);
        if (c) return c;
        if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string uvar_name(unsigned n, unsigned idx) {
    unsigned i = idx / n + 1, j = idx % n + 1;
    return "u_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string Polynomial::to_string(unsigned n_matrix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(t.c);
        for (unsigned v = 0; v < nvars_; ++v) {
            unsigned e = t.m.e[v];
            if (!e) continue;
            os << "*" << uvar_name(n_matrix, v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

size_t Polynomial::hash() const {
    MonoHash mh;
    std::uint64_t h = 14695981039346656037ULL ^ terms_.size();
    for (const Term& t : terms_) {
        h ^= mh(t.m);
        h *= 1099511628211ULL;
        h ^= std::hash<std::string>{}(rat_str(t.c));
        h *= 1099511628211ULL;
    }
    return (size_t)h;
}

}  // namespace gcl
