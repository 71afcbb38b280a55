#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gcl/errors.hpp"
#include "gcl/polynomial.hpp"

namespace gcl {

// Rational function over Q in the u_ij symbols.
//
// The denominator is stored factored: den = prod f_i^{e_i}, where each f_i is
// a primitive integer polynomial with positive leading coefficient, deg >= 1,
// and the list is sorted. In this problem domain denominators only ever arise
// as products of structured minors, so reduction never needs a multivariate
// gcd: it is enough to cancel the known factors by exact division. Equality
// is decided by cross-multiplication, which is exact regardless of whether a
// common factor survived.
class RationalFunction {
public:
    struct Factor {
        Polynomial p;
        int e;
    };

    RationalFunction() = default;
    explicit RationalFunction(Polynomial num) : num_(std::move(num)) {}
    RationalFunction(Polynomial num, const Polynomial& den);

    static RationalFunction constant(unsigned nvars, const Rational& c) {
        return RationalFunction(Polynomial::constant(nvars, c));
    }
    static RationalFunction variable(unsigned nvars, unsigned idx) {
        return RationalFunction(Polynomial::variable(nvars, idx));
    }

    // Scalar-like constructors so templated matrix code works over this type.
    RationalFunction(int) = delete;  // nvars required; use constant()

    unsigned nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    const Polynomial& numerator() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }
    Polynomial denominator() const;  // expanded product

    // Polynomial value, after a final reduction attempt; throws NotPolynomial.
    Polynomial to_polynomial(const std::string& what = "value") const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& g) const;
    RationalFunction operator-(const RationalFunction& g) const;
    RationalFunction operator*(const RationalFunction& g) const;
    RationalFunction operator/(const RationalFunction& g) const;
    RationalFunction& operator+=(const RationalFunction& g) { return *this = *this + g; }
    RationalFunction& operator-=(const RationalFunction& g) { return *this = *this - g; }
    RationalFunction& operator*=(const RationalFunction& g) { return *this = *this * g; }
    RationalFunction reciprocal() const;
    bool operator==(const RationalFunction& g) const;
    bool operator!=(const RationalFunction& g) const { return !(*this == g); }

    RationalFunction derivative(unsigned var) const;

    Rational eval(std::span<const Rational> point) const;  // throws PoleAtPoint

    template <class S>
    S eval_generic(std::span<const S> point) const {
        S v = num_.eval<S>(point);
        for (const Factor& f : den_) {
            S d = f.p.eval<S>(point);
            for (int k = 0; k < f.e; ++k) v = v / d;
        }
        return v;
    }

    std::string to_string(unsigned n_matrix) const;

private:
    Polynomial num_;
    std::vector<Factor> den_;

    void push_factor(const Polynomial& p, int e);  // normalizes and sorts later
    void sort_factors();
    void reduce();  // cancel den factors dividing num
    friend RationalFunction rf_with_factored_den(Polynomial num,
                                                 std::vector<RationalFunction::Factor> den);
};

RationalFunction rf_with_factored_den(Polynomial num, std::vector<RationalFunction::Factor> den);

inline RationalFunction sc_zero(const RationalFunction& p) {
    return RationalFunction(Polynomial::zero(p.nvars()));
}
inline RationalFunction sc_one(const RationalFunction& p) {
    return RationalFunction(Polynomial::constant(p.nvars(), 1));
}
inline RationalFunction sc_const(const RationalFunction& p, const Rational& q) {
    return RationalFunction::constant(p.nvars(), q);
}
inline bool sc_is_zero(const RationalFunction& x) { return x.is_zero(); }

}  // namespace gcl
