#pragma once

#include "gcl/poisson.hpp"

namespace gcl {

// Generalized cluster mutation machinery. The exchange matrix has N mutable
// rows over N+M columns; the seed owns the current variable values as exact
// rational functions (polynomials while regularity holds).

struct ExchangeMatrix {
    int N = 0, M = 0;
    std::vector<std::vector<long long>> b;  // N rows, N+M cols
    std::vector<int> mult;                  // d_1..d_N

    long long at(int i, int j) const { return b[(size_t)i][(size_t)j]; }
    // Skew-symmetrizability by D = diag(1/d_i) and the divisibility
    // d_i | gcd(row i over the mutable block).
    void check_invariants() const;
};

struct Seed {
    std::vector<VarName> names;
    std::vector<bool> frozen;
    std::vector<RationalFunction> values;
    std::vector<std::vector<FrozenMonomial>> strings;  // per index; empty for frozen
    ExchangeMatrix B;
    std::vector<std::string> history;

    int total() const { return (int)names.size(); }
    int index_of(const std::string& name) const;
    int index_of(const VarName& v) const;
};

Seed make_seed(const InitialSeed& init, ExchangeMatrix B);

// Laurent monomial y_k = prod_j x_j^{b_kj} as an exact rational function, and
// its value at a point.
RationalFunction y_variable(const Seed& s, int k);
Rational y_value_at(const Seed& s, int k, const PointMatrix& p);

// Generalized cluster mutation in direction k. When `require_regular` the new
// variable must reduce to a polynomial (exact division witness), else throws
// NotPolynomial.
Seed mutate(const Seed& s, int k, bool require_regular = false);
Seed mutate_sequence(Seed s, const std::vector<std::string>& names, bool require_regular = false);

// The hatted string entries p-hat_{kr} as Laurent monomials in the frozen
// variables (exponent maps over variable indices).
std::vector<std::map<int, long long>> hatted_string(const Seed& s, int k);

// Exchange-matrix inference from the coefficient matrix: the unique integer
// B with B Omega = [Delta 0], Delta_kk = d_k, zero columns on the Casimir
// variables (zero rows of Omega), and the det-variable column fixed by the
// degree-0 requirement on the y-variables. Throws InferenceError.
ExchangeMatrix infer_exchange_matrix(const CoefficientMatrix& omega, const InitialSeed& seed);

// Verification of Prop-compb conditions against a given B: log-canonicity is
// coefficient_matrix's job; here {log y_k, log psi_j} = delta_kj d_k via pure
// rational arithmetic on Omega, plus the Casimir property of the hatted
// strings. Returns a human-readable failure or empty string.
std::string check_compatibility(const CoefficientMatrix& omega, const Seed& s);

std::string export_quiver_dot(const Seed& s);
std::string export_quiver_json(const Seed& s);

}  // namespace gcl
