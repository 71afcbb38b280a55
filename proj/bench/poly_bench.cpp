// Compares the serial reference polynomial multiply against the OpenMP path
// and times a representative symbolic determinant.
#include <chrono>
#include <cstdio>

#include "gcl/matrix.hpp"

using namespace gcl;

static Polynomial random_poly(Rng& rng, unsigned nvars, int terms, int maxdeg) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        int budget = (int)rng.uniform(0, maxdeg);
        for (int d = 0; d < budget; ++d) ++m.e[(size_t)rng.uniform(0, nvars - 1)];
        ts.push_back({m, Rational(rng.uniform(-99, 99))});
    }
    return Polynomial::from_terms(nvars, std::move(ts));
}

template <class F>
static double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int main() {
    Rng rng(123456789);
    const unsigned nvars = 25;
    for (int terms : {200, 800, 2000}) {
        Polynomial a = random_poly(rng, nvars, terms, 8);
        Polynomial b = random_poly(rng, nvars, terms, 8);
        Polynomial rs, rp;
        double ts = time_ms([&] { rs = poly_mul_serial(a, b); });
        double tp = time_ms([&] { rp = poly_mul_parallel(a, b); });
        std::printf("mul %5d x %5d terms: serial %8.1f ms, omp %8.1f ms, equal=%d, out=%zu terms\n",
                    terms, terms, ts, tp, (int)(rs == rp), rs.term_count());
    }
    {
        PolyMatrix u = symbolic_u_poly(5);
        Polynomial d;
        double t = time_ms([&] { d = det_bareiss(u); });
        std::printf("det(symbolic 5x5) bareiss: %8.1f ms, %zu terms\n", t, d.term_count());
    }
    return 0;
}
