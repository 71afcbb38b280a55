#include "gcl/bd.hpp"

#include <algorithm>
#include <sstream>

namespace gcl {

int BDTriple::plus_closure(int i, const std::set<int>& g, int n) {
    int j = i;
    while (j <= n && g.count(j)) ++j;
    return j;
}

int BDTriple::minus_closure(int i, const std::set<int>& g) {
    int j = i - 1;
    while (j >= 1 && g.count(j)) --j;
    return j;
}

BDTriple BDTriple::validate(int n, const std::map<int, int>& gamma) {
    if (n < 2) throw BDValidationError("NotBijective");
    std::set<int> g1, g2;
    for (auto [a, b] : gamma) {
        if (a < 1 || a > n - 1 || b < 1 || b > n - 1) throw BDValidationError("NotBijective");
        g1.insert(a);
        if (!g2.insert(b).second) throw BDValidationError("NotBijective");
    }
    // Isometry: in type A the form is determined by adjacency, so gamma must
    // map adjacent roots to adjacent roots and non-adjacent to non-adjacent.
    for (auto [a1, b1] : gamma)
        for (auto [a2, b2] : gamma) {
            if (a1 >= a2) continue;
            bool adj_src = (a2 - a1 == 1);
            bool adj_dst = std::abs(b2 - b1) == 1;
            if (adj_src != adj_dst) throw BDValidationError("NotIsometry");
        }
    // Nilpotency: every forward orbit leaves Gamma1.
    for (auto [a, b] : gamma) {
        int cur = a;
        int guard = 0;
        for (;;) {
            if (!g1.count(cur)) break;
            cur = gamma.at(cur);
            if (++guard > n) throw BDValidationError("NotNilpotent");
        }
    }
    BDTriple t;
    t.n_ = n;
    t.gamma_ = gamma;
    t.g1_ = std::move(g1);
    t.g2_ = std::move(g2);
    for (auto [a, b] : gamma) t.ginv_[b] = a;
    t.derive();
    return t;
}

void BDTriple::derive() {
    // deg gamma: the largest escape exponent over Gamma1.
    deg_ = 0;
    for (auto [a, b] : gamma_) {
        (void)b;
        int cur = a, m = 0;
        while (g1_.count(cur)) {
            cur = gamma_.at(cur);
            ++m;
        }
        deg_ = std::max(deg_, m);
    }

    auto build_runs = [this](const std::set<int>& g, std::vector<Run>& runs, std::vector<int>& of) {
        runs.clear();
        of.assign((size_t)n_, -1);
        int i = 1;
        while (i <= n_) {
            int b = plus_closure(i, g, n_);
            runs.push_back(Run{i, b, Orientation::Trivial, -1});
            for (int k = i; k <= b; ++k) of[(size_t)k - 1] = (int)runs.size() - 1;
            i = b + 1;
        }
    };
    build_runs(g1_, xruns_, xrun_of_);
    build_runs(g2_, yruns_, yrun_of_);

    // Orientation and the X-run <-> Y-run correspondence.
    for (size_t xi = 0; xi < xruns_.size(); ++xi) {
        Run& x = xruns_[xi];
        if (x.trivial()) continue;
        int y = yrun_of(gamma_.at(x.a));
        x.partner = y;
        yruns_[(size_t)y].partner = (int)xi;
        if (x.b - x.a == 1) {
            // Two-element runs are positively oriented by convention.
            x.orient = Orientation::Positive;
        } else {
            int d = gamma_.at(x.a + 1) - gamma_.at(x.a);
            x.orient = d > 0 ? Orientation::Positive : Orientation::Negative;
        }
        yruns_[(size_t)y].orient = x.orient;
    }

    // Gamma-strings partition Pi; each starts outside Gamma2.
    strings_.clear();
    for (int a0 = 1; a0 <= n_ - 1; ++a0) {
        if (g2_.count(a0)) continue;
        GammaString s;
        int cur = a0;
        s.roots.push_back(cur);
        while (g1_.count(cur)) {
            cur = gamma_.at(cur);
            s.roots.push_back(cur);
        }
        strings_.push_back(std::move(s));
    }
}

int BDTriple::bar_gamma(int i) const {
    const Run& x = xruns_[(size_t)xrun_of(i)];
    if (x.trivial()) throw IndexOutOfRunError();
    const Run& y = yruns_[(size_t)x.partner];
    return x.orient == Orientation::Positive ? y.a + (i - x.a) : y.b - (i - x.a);
}

int BDTriple::bar_gamma_star(int j) const {
    const Run& y = yruns_[(size_t)yrun_of(j)];
    if (y.trivial() || y.partner < 0) throw IndexOutOfRunError();
    const Run& x = xruns_[(size_t)y.partner];
    return y.orient == Orientation::Positive ? x.a + (j - y.a) : x.b - (j - y.a);
}

std::set<int> BDTriple::check_gamma(int xrun_index, const std::set<int>& a) const {
    const Run& x = xruns_.at((size_t)xrun_index);
    if (x.trivial()) throw IndexOutOfRunError();
    for (int i : a)
        if (i < x.a || i > x.b) throw IndexOutOfRunError();
    const Run& y = yruns_[(size_t)x.partner];
    std::set<int> img;
    for (int i : a) img.insert(bar_gamma(i));
    if (x.orient == Orientation::Positive) return img;
    std::set<int> res;
    for (int j = y.a; j <= y.b; ++j)
        if (!img.count(j)) res.insert(j);
    return res;
}

std::vector<GammaString> BDTriple::gamma_star_strings() const { return opposite().gamma_strings(); }

std::pair<int, int> BDTriple::string_position(int alpha) const {
    for (size_t si = 0; si < strings_.size(); ++si) {
        const auto& r = strings_[si].roots;
        for (size_t k = 0; k < r.size(); ++k)
            if (r[k] == alpha) return {(int)si, (int)k};
    }
    throw GclError("string_position: root out of range");
}

BDTriple BDTriple::opposite() const {
    std::map<int, int> inv;
    for (auto [a, b] : gamma_) inv[b] = a;
    return validate(n_, inv);
}

BDTriple BDTriple::remove_pair(int p) const {
    if (!in_gamma1(p)) throw NotSubtripleError();
    std::map<int, int> g = gamma_;
    g.erase(p);
    return validate(n_, g);
}

bool BDTriple::is_subtriple_of(const BDTriple& big) const {
    if (n_ != big.n_) return false;
    for (auto [a, b] : gamma_) {
        auto it = big.gamma_.find(a);
        if (it == big.gamma_.end() || it->second != b) return false;
    }
    return true;
}

std::string BDTriple::describe() const {
    std::ostringstream os;
    os << "n=" << n_ << " gamma{";
    bool first = true;
    for (auto [a, b] : gamma_) {
        if (!first) os << ",";
        first = false;
        os << a << "->" << b;
    }
    os << "}";
    return os.str();
}

namespace {

void enumerate_maps(int n, const std::vector<int>& g1, std::vector<int>& g2pool,
                    std::vector<int>& current, std::vector<bool>& used,
                    std::vector<BDTriple>& out) {
    if (current.size() == g1.size()) {
        std::map<int, int> gamma;
        for (size_t i = 0; i < g1.size(); ++i) gamma[g1[i]] = current[i];
        try {
            out.push_back(BDTriple::validate(n, gamma));
        } catch (const BDValidationError&) {
        }
        return;
    }
    for (size_t j = 0; j < g2pool.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        current.push_back(g2pool[j]);
        enumerate_maps(n, g1, g2pool, current, used, out);
        current.pop_back();
        used[j] = false;
    }
}

}  // namespace

std::vector<BDTriple> BDTriple::enumerate_all(int n) {
    std::vector<BDTriple> out;
    int m = n - 1;
    for (unsigned mask1 = 0; mask1 < (1u << m); ++mask1)
        for (unsigned mask2 = 0; mask2 < (1u << m); ++mask2) {
            if (__builtin_popcount(mask1) != __builtin_popcount(mask2)) continue;
            std::vector<int> g1, g2;
            for (int i = 0; i < m; ++i) {
                if (mask1 & (1u << i)) g1.push_back(i + 1);
                if (mask2 & (1u << i)) g2.push_back(i + 1);
            }
            std::vector<int> cur;
            std::vector<bool> used(g2.size(), false);
            enumerate_maps(n, g1, g2, cur, used, out);
        }
    std::sort(out.begin(), out.end(), [](const BDTriple& a, const BDTriple& b) {
        if (a.gamma().size() != b.gamma().size()) return a.gamma().size() < b.gamma().size();
        return a.gamma() < b.gamma();
    });
    return out;
}

}  // namespace gcl
