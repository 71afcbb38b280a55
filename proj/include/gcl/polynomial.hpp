#pragma once

#include <array>
#include <cassert>
#include <cstring>
#include <stdexcept>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcl/rational.hpp"

namespace gcl {

// Exponent vector over the n^2 matrix symbols u_ij. Variables are ordered
// row-major: u_11, u_12, ..., u_1n, u_21, ..., u_nn. Fixed capacity keeps the
// keys allocation-free; n <= 6 covers everything the engine enumerates.
constexpr unsigned kMaxVars = 36;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint8_t nv = 0;

    explicit Monomial(unsigned nvars = 0) : nv((std::uint8_t)nvars) { assert(nvars <= kMaxVars); }
    unsigned nvars() const { return nv; }
    unsigned total() const {
        unsigned t = 0;
        for (unsigned i = 0; i < nv; ++i) t += e[i];
        return t;
    }
    bool divides(const Monomial& m) const {
        for (unsigned i = 0; i < nv; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r(nv);
        for (unsigned i = 0; i < nv; ++i) {
            unsigned s = (unsigned)e[i] + m.e[i];
            if (s >= 256) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = (std::uint8_t)s;
        }
        return r;
    }
    Monomial operator/(const Monomial& m) const {
        Monomial r(nv);
        for (unsigned i = 0; i < nv; ++i) {
            assert(e[i] >= m.e[i]);
            r.e[i] = (std::uint8_t)(e[i] - m.e[i]);
        }
        return r;
    }
    bool operator==(const Monomial& m) const {
        return nv == m.nv && std::memcmp(e.data(), m.e.data(), nv) == 0;
    }
};

// Graded lexicographic order: total degree first, then lexicographic with the
// row-major first variable most significant. Returns <0, 0, >0.
int mono_cmp(const Monomial& a, const Monomial& b);

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};

struct MonoHash {
    size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned i = 0; i < m.nv; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ULL;
        }
        return (size_t)h;
    }
};

struct Term {
    Monomial m;
    Rational c;
};

// Scalar prototype helpers: templated code constructs 0/1 "like" an existing
// value; the prototype carries the variable count where one is needed. Each
// scalar type declares its overloads before any template that uses them.
inline Rational sc_zero(const Rational&) { return Rational(0); }
inline Rational sc_one(const Rational&) { return Rational(1); }
inline Rational sc_const(const Rational&, const Rational& q) { return q; }
inline bool sc_is_zero(const Rational& x) { return x == 0; }

// Sparse multivariate polynomial over Q. Terms are kept sorted in descending
// graded-lex order with no zero coefficients; this is the canonical form used
// by the text rendering and the golden files.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(unsigned nvars) : nvars_(nvars) {}

    static Polynomial zero(unsigned nvars) { return Polynomial(nvars); }
    static Polynomial constant(unsigned nvars, const Rational& c);
    static Polynomial variable(unsigned nvars, unsigned idx);
    static Polynomial from_terms(unsigned nvars, std::vector<Term> terms);  // normalizes
    // Trusted path: terms already strictly descending with nonzero coeffs.
    static Polynomial from_sorted_unique(unsigned nvars, std::vector<Term> terms);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.total() == 0); }
    Rational constant_value() const;  // requires is_constant()
    bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].c == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    unsigned total_degree() const;  // 0 for the zero polynomial
    const Term& leading() const { return terms_.front(); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned k) const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial derivative(unsigned var) const;

    // Exact multivariate division: q with *this == q*g, or nullopt.
    std::optional<Polynomial> exact_divide(const Polynomial& g) const;

    // content() = rational c such that (*this)/c has coprime integer
    // coefficients and positive leading coefficient; primitive_part() is that
    // quotient. Zero polynomial has content 0.
    Rational content() const;
    Polynomial primitive_part() const;

    template <class S>
    S eval(std::span<const S> point) const;

    // Total order compatible with ==; used to sort denominator factors.
    static int cmp(const Polynomial& a, const Polynomial& b);

    // Canonical text: terms in the fixed order, "c*u_1_1^2*u_2_3" syntax.
    std::string to_string(unsigned n_matrix) const;

    size_t hash() const;

private:
    unsigned nvars_;
    std::vector<Term> terms_;  // descending graded-lex, nonzero coeffs
    friend Polynomial poly_mul(const Polynomial&, const Polynomial&);
    void normalize_sorted();  // assumes sorted, merges dups, drops zeros
};

inline Polynomial sc_zero(const Polynomial& p) { return Polynomial::zero(p.nvars()); }
inline Polynomial sc_one(const Polynomial& p) { return Polynomial::constant(p.nvars(), 1); }
inline Polynomial sc_const(const Polynomial& p, const Rational& q) {
    return Polynomial::constant(p.nvars(), q);
}
inline bool sc_is_zero(const Polynomial& x) { return x.is_zero(); }

// Multiplication kernel with a serial reference path and an OpenMP path; the
// dispatcher picks by operand size. Both paths are exercised by the tests.
Polynomial poly_mul_serial(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul_parallel(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

template <class S>
S Polynomial::eval(std::span<const S> point) const {
    assert(point.size() == nvars_);
    assert(nvars_ > 0);
    // Per-variable power tables keep the monomial products cheap.
    std::vector<std::vector<S>> powers(nvars_);
    S acc = sc_zero(point[0]);
    for (const Term& t : terms_) {
        S v = sc_const(point[0], t.c);
        for (unsigned i = 0; i < nvars_; ++i) {
            unsigned e = t.m.e[i];
            if (!e) continue;
            auto& tab = powers[i];
            if (tab.empty()) tab.push_back(point[i]);
            while (tab.size() < e) tab.push_back(tab.back() * point[i]);
            v = v * tab[e - 1];
        }
        acc = acc + v;
    }
    return acc;
}

// Variable index helpers for the u_ij symbols (1-based matrix indices).
inline unsigned uvar(unsigned n, unsigned i, unsigned j) {
    assert(1 <= i && i <= n && 1 <= j && j <= n);
    return (i - 1) * n + (j - 1);
}
std::string uvar_name(unsigned n, unsigned idx);

}  // namespace gcl
