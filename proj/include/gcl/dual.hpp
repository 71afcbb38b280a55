#pragma once

#include "gcl/errors.hpp"
#include "gcl/rational.hpp"

namespace gcl {

// Q[eps]/(eps^2): exact forward-mode derivative carrier. Evaluating a map
// over Dual at U = P + eps*E_ab yields all d(map_ij)/du_ab at P in one pass.
struct Dual {
    Rational a;  // value
    Rational b;  // derivative part

    Dual() : a(0), b(0) {}
    Dual(int v) : a(v), b(0) {}
    explicit Dual(Rational v) : a(std::move(v)), b(0) {}
    Dual(Rational v, Rational d) : a(std::move(v)), b(std::move(d)) {}

    Dual operator-() const { return {-a, -b}; }
    Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
    Dual operator-(const Dual& o) const { return {a - o.a, b - o.b}; }
    Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }
    Dual operator/(const Dual& o) const {
        if (o.a == 0) throw PoleAtPointError();
        Rational inv = Rational(1) / o.a;
        return {a * inv, (b * o.a - a * o.b) * inv * inv};
    }
    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    bool operator==(const Dual& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline Dual sc_zero(const Dual&) { return Dual(0); }
inline Dual sc_one(const Dual&) { return Dual(1); }
inline Dual sc_const(const Dual&, const Rational& q) { return Dual(q); }
inline bool sc_is_zero(const Dual& x) { return x.is_zero(); }

}  // namespace gcl
