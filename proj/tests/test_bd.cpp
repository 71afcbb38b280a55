#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcl/bd.hpp"

using namespace gcl;

TEST_CASE("validation: Cremmer-Gervais n=3 and axiom failures") {
    auto cg3 = BDTriple::validate(3, {{1, 2}});
    CHECK(cg3.deg_gamma() == 1);
    CHECK(cg3.k_gamma() == 1);
    CHECK_THROWS_AS(BDTriple::validate(3, {{1, 1}}), BDValidationError);  // NotNilpotent
    try {
        BDTriple::validate(3, {{1, 1}});
    } catch (const BDValidationError& e) {
        CHECK(e.axiom == "NotNilpotent");
    }
    // n=5 negative orientation triple from the worked examples.
    auto d3 = BDTriple::validate(5, {{1, 4}, {2, 3}});
    CHECK(d3.deg_gamma() == 1);
    CHECK(d3.k_gamma() == 2);
    // gamma{1->3,2->4} maps adjacent to non-adjacent? 3,4 adjacent; fine; but
    // {1->3, 3->1} maps the non-adjacent pair (1,3) to (3,1): still
    // non-adjacent, yet nilpotency fails (cycle).
    CHECK_THROWS_AS(BDTriple::validate(5, {{1, 3}, {3, 1}}), BDValidationError);
    // Isometry failure: adjacent 1,2 mapped to non-adjacent 1,3.
    try {
        BDTriple::validate(5, {{1, 1}, {2, 3}});
        CHECK(false);
    } catch (const BDValidationError& e) {
        CHECK(e.axiom == "NotIsometry");
    }
}

TEST_CASE("runs: intervals, orientations, partitions") {
    auto cg3 = BDTriple::validate(3, {{1, 2}});
    REQUIRE(cg3.xruns().size() == 2);
    CHECK(cg3.xruns()[0].a == 1);
    CHECK(cg3.xruns()[0].b == 2);
    CHECK(cg3.xruns()[1].a == 3);
    CHECK(cg3.xruns()[1].b == 3);
    REQUIRE(cg3.yruns().size() == 2);
    CHECK(cg3.yruns()[0].a == 1);
    CHECK(cg3.yruns()[0].b == 1);
    CHECK(cg3.yruns()[1].a == 2);
    CHECK(cg3.yruns()[1].b == 3);
    CHECK(cg3.xruns()[0].orient == Orientation::Positive);

    auto triv = BDTriple::validate(4, {});
    for (auto& r : triv.xruns()) CHECK(r.trivial());

    auto d3 = BDTriple::validate(5, {{1, 4}, {2, 3}});
    CHECK(d3.xruns()[0].a == 1);
    CHECK(d3.xruns()[0].b == 3);
    CHECK(d3.xruns()[0].orient == Orientation::Negative);
    CHECK(d3.bar_gamma(1) == 5);
    CHECK(d3.bar_gamma(2) == 4);
    CHECK(d3.bar_gamma(3) == 3);

    // X- and Y-runs partition [1,n] for every valid triple up to n = 6.
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : BDTriple::enumerate_all(n)) {
            int covered = 0;
            for (auto& r : t.xruns()) covered += r.b - r.a + 1;
            CHECK(covered == n);
            covered = 0;
            for (auto& r : t.yruns()) covered += r.b - r.a + 1;
            CHECK(covered == n);
        }
}

TEST_CASE("gamma strings") {
    auto cg3 = BDTriple::validate(3, {{1, 2}});
    REQUIRE(cg3.gamma_strings().size() == 1);
    CHECK(cg3.gamma_strings()[0].roots == std::vector<int>{1, 2});

    auto triv = BDTriple::validate(4, {});
    REQUIRE(triv.gamma_strings().size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(triv.gamma_strings()[(size_t)i].roots == std::vector<int>{i + 1});

    auto cg4 = BDTriple::validate(4, {{2, 1}, {3, 2}});  // gamma: i -> i-1
    REQUIRE(cg4.gamma_strings().size() == 1);
    CHECK(cg4.gamma_strings()[0].roots == std::vector<int>{3, 2, 1});

    // Strings partition Pi for all valid triples up to n = 6, and the
    // F-stabilization index bound deg gamma = 0 iff Gamma1 empty.
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : BDTriple::enumerate_all(n)) {
            std::set<int> seen;
            for (auto& s : t.gamma_strings())
                for (int r : s.roots) CHECK(seen.insert(r).second);
            CHECK((int)seen.size() == n - 1);
            CHECK((t.deg_gamma() == 0) == t.trivial());
            // A string is longer than a single root exactly when its head
            // maps forward into Gamma2 (i.e. lies in Gamma1).
            for (auto& str : t.gamma_strings())
                CHECK((str.roots.size() >= 2) == t.in_gamma1(str.roots.front()));
        }
}

TEST_CASE("check_gamma subset map") {
    auto cg3 = BDTriple::validate(3, {{1, 2}});
    CHECK(cg3.check_gamma(0, {1}) == std::set<int>{2});
    auto d3 = BDTriple::validate(5, {{1, 4}, {2, 3}});
    CHECK(d3.check_gamma(0, {2}) == std::set<int>{3, 5});
    CHECK(d3.check_gamma(0, {}) == std::set<int>{3, 4, 5});  // complement of empty image
    CHECK_THROWS_AS(d3.check_gamma(0, {4}), IndexOutOfRunError);
}

TEST_CASE("enumeration counts are stable") {
    CHECK(BDTriple::enumerate_all(2).size() == 1);  // trivial only
    CHECK(BDTriple::enumerate_all(3).size() == 3);  // trivial, 1->2, 2->1
    auto all4 = BDTriple::enumerate_all(4);
    CHECK(all4.size() == 9);
    // The two |Gamma1| = 2 triples at n=4 are the Cremmer-Gervais pair.
    int big = 0;
    for (auto& t : all4) big += t.gamma().size() == 2;
    CHECK(big == 2);
}

TEST_CASE("opposite and removal") {
    auto cg4 = BDTriple::validate(4, {{2, 1}, {3, 2}});
    auto op = cg4.opposite();
    CHECK(op.gamma() == std::map<int, int>{{1, 2}, {2, 3}});
    auto small = cg4.remove_pair(3);
    CHECK(small.gamma() == std::map<int, int>{{2, 1}});
    CHECK(small.is_subtriple_of(cg4));
    CHECK(!cg4.is_subtriple_of(small));
}
