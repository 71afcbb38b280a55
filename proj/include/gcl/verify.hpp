#pragma once

#include "gcl/seed.hpp"

namespace gcl {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;  // witnesses on failure, occasionally a note on pass
};

struct Report {
    std::string command;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;
    std::vector<CheckItem> checks;

    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

// Probabilistic rational-function equality: f == g iff they agree at
// `npoints` independent uniform points with entries in [-10^6, 10^6]
// (poles resampled). For a nonzero difference of total degree d the
// Schwartz-Zippel bound gives failure probability at most (d / 2e6)^npoints
// per check; with d <= 66 and 3 points this is < 4e-14. When both sides are
// polynomials of total degree <= 12 the comparison falls back to the exact
// symbolic test, making the answer deterministic.
bool rf_probably_equal(const RationalFunction& f, const RationalFunction& g, int n, Rng& rng,
                       int npoints = 3);

// --- verification drivers (shared by the CLI and the acceptance suite) ---

// Log-canonicity + exchange-matrix inference + B*Omega = [Delta 0] in the
// requested r0 mode + Casimir hatted strings + full rank + frozen count.
Report verify_compat(const BDTriple& t, Convention conv, R0Mode mode, std::uint64_t seed,
                     int npoints = 3);

// Q* fixes phi- and c-functions; Q*(h_ij) = h~_ij * prod h~_{a_t+1,a_t+1};
// for each removable pair, G*(h_ij) = h~_ij (h~_{q+1,q+1} when p is in the
// forward gamma-orbit of i-1). Symbolic for n <= symbolic_q_cap, else exact
// at 5 random points.
Report verify_quasi_iso(const BDTriple& t, std::uint64_t seed, int symbolic_q_cap = 3);

// Coordinate-pair bracket transport along Q with a shared r0; the
// mismatched-r0 control; the transposition anti-Poisson map.
Report verify_poisson_map(const BDTriple& t, std::uint64_t seed, int npoints = 3);

// Toric/invariance package: y degree 0; y invariance under H_Gamma
// conjugation; frozen variables log-canonical with coordinates; h-variables
// invariant under twisted unipotent conjugation; frozen h nonzero at I.
Report verify_toric(const BDTriple& t, Convention conv, std::uint64_t seed, int npoints = 3);

// The two gradient lemmas for all index quadruples at a random point.
Report verify_gradient_lemmas(int n, std::uint64_t seed);

// |Gamma1| = 1 marked-variable package: Q* y(psi_square) equals the stated
// frozen monomial; {log Q*y(psi_square), log h-hat_ks} matches the indicator
// formula -[k=p+1] + [k=q+1][s=q+1].
Report verify_marked_bracket(const BDTriple& t, std::uint64_t seed, int npoints = 3);

// Marked mutations (criterion 6) for one |Gamma1|=1 triple at n=4: the
// initial-cluster mutation, the shifted-cluster sequence, the shifted marked
// mutation, polynomiality, and coprimality-at-points.
Report verify_marked_mutations(const BDTriple& t, std::uint64_t seed);

// Helper shared with the CLI: seed + inferred B from a generic-r0 coefficient
// matrix.
Seed build_inferred_seed(const BDTriple& t, Convention conv, Group group, std::uint64_t seed,
                         int symbolic_cap = 4);

}  // namespace gcl
