#include "gcl/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace gcl {

RationalFunction::RationalFunction(Polynomial num, const Polynomial& den) : num_(std::move(num)) {
    if (den.is_zero()) throw DenominatorVanishesError();
    assert(num_.nvars() == den.nvars());
    if (den.is_constant()) {
        num_ = num_.scaled(Rational(1) / den.constant_value());
        return;
    }
    Rational c = den.content();
    num_ = num_.scaled(Rational(1) / c);
    push_factor(den.scaled(Rational(1) / c), 1);
    sort_factors();
    reduce();
}

void RationalFunction::push_factor(const Polynomial& p, int e) {
    assert(!p.is_constant());
    den_.push_back({p, e});
}

void RationalFunction::sort_factors() {
    std::sort(den_.begin(), den_.end(),
              [](const Factor& a, const Factor& b) { return Polynomial::cmp(a.p, b.p) < 0; });
    std::vector<Factor> out;
    for (auto& f : den_) {
        if (!out.empty() && Polynomial::cmp(out.back().p, f.p) == 0)
            out.back().e += f.e;
        else
            out.push_back(std::move(f));
    }
    std::erase_if(out, [](const Factor& f) { return f.e == 0; });
    den_ = std::move(out);
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& f : den_) {
        while (f.e > 0) {
            auto q = num_.exact_divide(f.p);
            if (!q) break;
            num_ = std::move(*q);
            --f.e;
        }
    }
    std::erase_if(den_, [](const Factor& f) { return f.e == 0; });
}

RationalFunction rf_with_factored_den(Polynomial num, std::vector<RationalFunction::Factor> den) {
    RationalFunction r(std::move(num));
    for (auto& f : den) {
        if (f.e == 0) continue;
        assert(f.e > 0);
        if (f.p.is_zero()) throw DenominatorVanishesError();
        if (f.p.is_constant()) {
            r.num_ = r.num_.scaled(rat_pow(Rational(1) / f.p.constant_value(), f.e));
            continue;
        }
        Rational c = f.p.content();
        r.num_ = r.num_.scaled(rat_pow(Rational(1) / c, f.e));
        r.push_factor(f.p.scaled(Rational(1) / c), f.e);
    }
    r.sort_factors();
    r.reduce();
    return r;
}

Polynomial RationalFunction::denominator() const {
    Polynomial d = Polynomial::constant(num_.nvars(), 1);
    for (const Factor& f : den_) d = d * f.p.pow((unsigned)f.e);
    return d;
}

Polynomial RationalFunction::to_polynomial(const std::string& what) const {
    if (den_.empty()) return num_;
    // Last resort: a single expanded division can succeed where per-factor
    // cancellation failed (numerator divisible by the product only).
    auto q = num_.exact_divide(denominator());
    if (!q) throw NotPolynomialError(what);
    return *q;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& g) const {
    assert(nvars() == g.nvars());
    // Common denominator by factor-multiset union with max exponents.
    std::vector<Factor> common;
    Polynomial a = num_, b = g.num_;
    size_t i = 0, j = 0;
    auto mul_pow = [](Polynomial& p, const Polynomial& f, int e) {
        for (int k = 0; k < e; ++k) p = p * f;
    };
    while (i < den_.size() || j < g.den_.size()) {
        int c = i == den_.size() ? 1 : j == g.den_.size() ? -1 : Polynomial::cmp(den_[i].p, g.den_[j].p);
        if (c < 0) {
            common.push_back(den_[i]);
            mul_pow(b, den_[i].p, den_[i].e);
            ++i;
        } else if (c > 0) {
            common.push_back(g.den_[j]);
            mul_pow(a, g.den_[j].p, g.den_[j].e);
            ++j;
        } else {
            int e = std::max(den_[i].e, g.den_[j].e);
            common.push_back({den_[i].p, e});
            mul_pow(a, den_[i].p, e - den_[i].e);
            mul_pow(b, den_[i].p, e - g.den_[j].e);
            ++i, ++j;
        }
    }
    return rf_with_factored_den(a + b, std::move(common));
}

RationalFunction RationalFunction::operator-(const RationalFunction& g) const { return *this + (-g); }

RationalFunction RationalFunction::operator*(const RationalFunction& g) const {
    assert(nvars() == g.nvars());
    std::vector<Factor> den = den_;
    den.insert(den.end(), g.den_.begin(), g.den_.end());
    return rf_with_factored_den(num_ * g.num_, std::move(den));
}

RationalFunction RationalFunction::reciprocal() const {
    if (num_.is_zero()) throw DenominatorVanishesError();
    Polynomial n = denominator();
    Rational c = num_.content();
    n = n.scaled(Rational(1) / c);
    Polynomial p = num_.primitive_part();
    std::vector<Factor> den;
    if (!p.is_constant()) den.push_back({std::move(p), 1});
    return rf_with_factored_den(std::move(n), std::move(den));
}

RationalFunction RationalFunction::operator/(const RationalFunction& g) const {
    return *this * g.reciprocal();
}

bool RationalFunction::operator==(const RationalFunction& g) const {
    if (num_.is_zero()) return g.num_.is_zero();
    if (g.num_.is_zero()) return false;
    // Structural fast path.
    if (den_.size() == g.den_.size()) {
        bool same = true;
        for (size_t k = 0; k < den_.size() && same; ++k)
            same = den_[k].e == g.den_[k].e && Polynomial::cmp(den_[k].p, g.den_[k].p) == 0;
        if (same) return num_ == g.num_;
    }
    return num_ * g.denominator() == g.num_ * denominator();
}

RationalFunction RationalFunction::derivative(unsigned var) const {
    // d(f / prod g_i^{e_i}) = (f' - f * sum e_i g_i'/g_i) / prod g_i^{e_i};
    // over a common denominator prod g_i this gives one layered quotient.
    if (den_.empty()) return RationalFunction(num_.derivative(var));
    Polynomial all = Polynomial::constant(nvars(), 1);
    for (const Factor& f : den_) all = all * f.p;
    Polynomial top = num_.derivative(var) * all;
    for (size_t i = 0; i < den_.size(); ++i) {
        Polynomial rest = Polynomial::constant(nvars(), 1);
        for (size_t j = 0; j < den_.size(); ++j)
            if (j != i) rest = rest * den_[j].p;
        top -= num_.scaled(Rational(den_[i].e)) * den_[i].p.derivative(var) * rest;
    }
    std::vector<Factor> den = den_;
    for (auto& f : den) ++f.e;
    return rf_with_factored_den(std::move(top), std::move(den));
}

Rational RationalFunction::eval(std::span<const Rational> point) const {
    Rational d(1);
    for (const Factor& f : den_) {
        Rational v = f.p.eval<Rational>(point);
        if (v == 0) throw PoleAtPointError();
        d *= rat_pow(v, f.e);
    }
    return num_.eval<Rational>(point) / d;
}

std::string RationalFunction::to_string(unsigned n_matrix) const {
    if (den_.empty()) return num_.to_string(n_matrix);
    std::ostringstream os;
    os << "(" << num_.to_string(n_matrix) << ")";
    for (const Factor& f : den_) {
        os << " / (" << f.p.to_string(n_matrix) << ")";
        if (f.e > 1) os << "^" << f.e;
    }
    return os.str();
}

}  // namespace gcl
