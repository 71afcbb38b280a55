#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcl/errors.hpp"
#include "gcl/rational.hpp"

namespace gcl {

// Belavin-Drinfeld triple of type A_{n-1}: subsets Gamma1, Gamma2 of the
// simple roots [1, n-1] and a nilpotent isometry gamma : Gamma1 -> Gamma2.
// Runs, the index map bar-gamma, the subset map check-gamma and the
// gamma-strings are all derived data computed once at validation.

enum class Orientation { Trivial, Positive, Negative };

struct Run {
    int a, b;  // interval [a, b] within [1, n]
    Orientation orient = Orientation::Trivial;
    int partner = -1;  // index of the corresponding run of the other kind
    bool trivial() const { return a == b; }
};

struct GammaString {
    std::vector<int> roots;  // alpha_0, ..., alpha_m
};

class BDTriple {
public:
    // Validates the three axioms; throws BDValidationError naming the
    // violated one (NotBijective | NotIsometry | NotNilpotent).
    static BDTriple validate(int n, const std::map<int, int>& gamma);
    static std::vector<BDTriple> enumerate_all(int n);

    int n() const { return n_; }
    const std::map<int, int>& gamma() const { return gamma_; }
    const std::set<int>& gamma1() const { return g1_; }
    const std::set<int>& gamma2() const { return g2_; }
    bool trivial() const { return gamma_.empty(); }
    bool in_gamma1(int a) const { return g1_.count(a) > 0; }
    bool in_gamma2(int a) const { return g2_.count(a) > 0; }
    int gamma_of(int a) const { return gamma_.at(a); }
    int gamma_star_of(int b) const { return ginv_.at(b); }
    int deg_gamma() const { return deg_; }
    int k_gamma() const { return n_ - 1 - (int)g2_.size(); }

    // Closures within a subset: the first index outside g at or after i, and
    // the last index outside g strictly before i.
    static int plus_closure(int i, const std::set<int>& g, int n);
    static int minus_closure(int i, const std::set<int>& g);

    const std::vector<Run>& xruns() const { return xruns_; }
    const std::vector<Run>& yruns() const { return yruns_; }
    int xrun_of(int i) const { return xrun_of_.at((size_t)i - 1); }
    int yrun_of(int i) const { return yrun_of_.at((size_t)i - 1); }

    // bar-gamma : union of nontrivial X-runs -> union of nontrivial Y-runs,
    // the increasing (positive) or decreasing (negative) relabeling per run;
    // bar-gamma-star is its inverse.
    int bar_gamma(int i) const;
    int bar_gamma_star(int j) const;

    // check-gamma on subsets of a nontrivial X-run: the image of A under
    // bar-gamma for positive orientation, the complement of that image in the
    // Y-run for negative orientation.
    std::set<int> check_gamma(int xrun_index, const std::set<int>& a) const;

    const std::vector<GammaString>& gamma_strings() const { return strings_; }
    std::vector<GammaString> gamma_star_strings() const;  // strings of gamma^*
    // The string containing the given root, and the position within it.
    std::pair<int, int> string_position(int alpha) const;

    BDTriple opposite() const;                 // (Gamma2, Gamma1, gamma^*)
    BDTriple remove_pair(int p) const;         // remove p from Gamma1, gamma(p) from Gamma2
    bool is_subtriple_of(const BDTriple& big) const;

    std::string describe() const;  // "n=3 gamma{1->2}"

private:
    BDTriple() = default;
    void derive();

    int n_ = 0;
    std::map<int, int> gamma_;
    std::map<int, int> ginv_;
    std::set<int> g1_, g2_;
    int deg_ = 0;
    std::vector<Run> xruns_, yruns_;
    std::vector<int> xrun_of_, yrun_of_;  // per index 1..n
    std::vector<GammaString> strings_;
};

}  // namespace gcl
