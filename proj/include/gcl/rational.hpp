#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gcl {

using Int = boost::multiprecision::cpp_int;

// Exact rational. cpp_rational keeps gcd(num,den)=1 and den>0, which is the
// canonical form everything below relies on.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Rational rat_pow(const Rational& q, long long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0^negative");
        return Rational(0);
    }
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long long k = e > 0 ? (unsigned long long)e : (unsigned long long)(-e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rational& q) { return q.str(); }

// Seeded generator for all randomized checks; every verification derives its
// stream from the job seed so reports are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform integer in [-10^6, 10^6], as a Rational with denominator 1.
    // Height bound keeps bit growth in long exact computations manageable.
    Rational small_int() {
        std::uniform_int_distribution<long long> d(-1000000, 1000000);
        return Rational(d(eng_));
    }
    Rational nonzero_small_int() {
        for (;;) {
            Rational r = small_int();
            if (r != 0) return r;
        }
    }
    long long uniform(long long lo, long long hi) {
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(eng_);
    }
    std::uint64_t raw() { return eng_(); }

    // Deterministic substream: independent of call order between checks.
    static std::uint64_t substream(std::uint64_t seed, const std::string& tag) {
        std::uint64_t h = 1469598103934665603ULL ^ seed;
        for (char c : tag) {
            h ^= (unsigned char)c;
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace gcl
