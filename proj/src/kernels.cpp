#include <algorithm>
#include <unordered_map>

#include "gcl/polynomial.hpp"

#ifdef GCL_HAVE_OPENMP
#include <omp.h>
#endif

namespace gcl {

namespace {

using Acc = std::unordered_map<Monomial, Rational, MonoHash>;

Polynomial from_acc(unsigned nvars, Acc&& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.push_back({m, std::move(c)});
    return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace

Polynomial poly_mul_serial(const Polynomial& a, const Polynomial& b) {
    assert(a.nvars() == b.nvars());
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
    Acc acc;
    acc.reserve(a.term_count() + b.term_count());
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms()) {
            auto [it, fresh] = acc.emplace(ta.m * tb.m, Rational(0));
            it->second += ta.c * tb.c;
        }
    return from_acc(a.nvars(), std::move(acc));
}

Polynomial poly_mul_parallel(const Polynomial& a, const Polynomial& b) {
#ifndef GCL_HAVE_OPENMP
    return poly_mul_serial(a, b);
#else
    assert(a.nvars() == b.nvars());
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
    const auto& as = a.terms();
    const auto& bs = b.terms();
    int nthreads = omp_get_max_threads();
    if (nthreads <= 1) return poly_mul_serial(a, b);
    // Each thread owns one hash slice of the output key space: the monomial
    // products are recomputed per thread (cheap), the rational accumulation
    // (expensive) is partitioned, and no cross-thread merge is needed.
    std::vector<std::vector<Term>> slices((size_t)nthreads);
    MonoHash mh;
#pragma omp parallel num_threads(nthreads)
    {
        int t = omp_get_thread_num();
        Acc acc;
        acc.reserve((as.size() * bs.size()) / (size_t)nthreads / 2 + 8);
        for (const Term& ta : as)
            for (const Term& tb : bs) {
                Monomial m = ta.m * tb.m;
                if ((int)(mh(m) % (size_t)nthreads) != t) continue;
                auto [it, fresh] = acc.emplace(std::move(m), Rational(0));
                it->second += ta.c * tb.c;
            }
        auto& out = slices[(size_t)t];
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) out.push_back({m, std::move(c)});
        std::sort(out.begin(), out.end(),
                  [](const Term& x, const Term& y) { return mono_cmp(x.m, y.m) > 0; });
    }
    // Keys are distinct across slices, so a plain k-way merge finishes the job.
    std::vector<Term> all;
    size_t total = 0;
    for (auto& s : slices) total += s.size();
    all.reserve(total);
    std::vector<size_t> pos(slices.size(), 0);
    for (size_t k = 0; k < total; ++k) {
        int best = -1;
        for (size_t s = 0; s < slices.size(); ++s) {
            if (pos[s] == slices[s].size()) continue;
            if (best < 0 || mono_cmp(slices[s][pos[s]].m, slices[(size_t)best][pos[(size_t)best]].m) > 0)
                best = (int)s;
        }
        all.push_back(std::move(slices[(size_t)best][pos[(size_t)best]++]));
    }
    return Polynomial::from_sorted_unique(a.nvars(), std::move(all));
#endif
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    // The parallel path pays off once the term-pair count is large.
    if (a.term_count() * b.term_count() >= 16384) return poly_mul_parallel(a, b);
    return poly_mul_serial(a, b);
}

}  // namespace gcl
