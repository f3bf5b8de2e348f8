#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihara/errors.hpp"
#include "ihara/polynomial.hpp"
#include "ihara/shift.hpp"
#include "ihara/zeta.hpp"
#include "test_util.hpp"

using namespace ihara;

// Billiard symbols, 0-based: the paper's e^(k) is symbol k-1 and
// (e^(k))^-1 is symbol k+7. e.g. e1 = 0 = (1,2), e6 = 5 = (2,5),
// (e5)^-1 = 12 = (5,1).

TEST_CASE("forbidden set has 2m blocks of the form e e^-1") {
    OrientedEdgeAlphabet a = build_alphabet(make_billiard_graph());
    ForbiddenSet f = build_forbidden_set(a);
    CHECK(f.blocks.size() == 16);
    for (const auto& b : f.blocks) CHECK(b[1] == a.inverse(b[0]));
}

TEST_CASE("admissibility of the worked billiard blocks") {
    OrientedEdgeAlphabet a = build_alphabet(make_billiard_graph());
    CHECK(is_admissible({{0, 5, 12}}, a));        // e1 e6 (e5)^-1
    CHECK_FALSE(is_admissible({{0, 8}}, a));      // e1 (e1)^-1, forbidden
    CHECK_FALSE(is_admissible({{0, 2}}, a));      // e1 e3: t(e1) = 2 != 4 = i(e3)
    CHECK_THROWS_AS(is_admissible({{0, 99}}, a), DomainError);
}

TEST_CASE("the worked walk W = P1^2 e1 e2 P2^2 is admissible") {
    OrientedEdgeAlphabet a = build_alphabet(make_billiard_graph());
    Block w{{0, 5, 12, 0, 5, 12, 0, 1, 2, 6, 15, 2, 6, 15}};
    CHECK(is_admissible(w, a));
}

TEST_CASE("no primes of length <= 2") {
    for (const Graph& g : testutil::suite_graphs(4)) {
        CHECK(enumerate_primes(g, 2).empty());
    }
}

TEST_CASE("K4 has eight primes of length 3, bipartite has none") {
    std::vector<PrimeCycle> k4 = enumerate_primes(make_complete_graph(4), 3);
    CHECK(k4.size() == 8);
    for (const auto& p : k4) CHECK(p.length() == 3);

    CHECK(enumerate_primes(make_complete_bipartite(2, 3), 3).empty());
}

TEST_CASE("billiard primes include the paper's P1 and P2") {
    std::vector<PrimeCycle> primes = enumerate_primes(make_billiard_graph(), 3);
    CHECK(primes.size() == 8);
    PrimeCycle p1{{0, 5, 12}};
    PrimeCycle p2{{2, 6, 15}};
    CHECK(std::find(primes.begin(), primes.end(), p1) != primes.end());
    CHECK(std::find(primes.begin(), primes.end(), p2) != primes.end());
}

TEST_CASE("canonicalization collapses rotations") {
    std::vector<int> w{4, 11, 2, 9};
    std::vector<int> expect{2, 9, 4, 11};
    CHECK(canonical_rotation(w) == expect);
    std::vector<int> rot{9, 4, 11, 2};
    CHECK(canonical_rotation(rot) == expect);
}

TEST_CASE("enumerated primes are canonical, primitive and admissible when doubled") {
    OrientedEdgeAlphabet a = build_alphabet(make_billiard_graph());
    std::vector<PrimeCycle> primes = enumerate_primes(make_billiard_graph(), 6);
    for (const auto& p : primes) {
        CHECK(canonical_rotation(p.symbols) == p.symbols);
        Block doubled{p.symbols};
        doubled.symbols.insert(doubled.symbols.end(), p.symbols.begin(), p.symbols.end());
        CHECK(is_admissible(doubled, a));
    }
}

TEST_CASE("trace inversion equals direct enumeration") {
    for (const Graph& g : testutil::suite_graphs()) {
        if (2 * g.m() > 20) continue;
        std::map<int, Int> from_traces = prime_counts_from_traces(g, 6);
        std::vector<PrimeCycle> primes = enumerate_primes(g, 6);
        std::map<int, Int> from_enum;
        for (int l = 1; l <= 6; ++l) from_enum[l] = 0;
        for (const auto& p : primes) from_enum[p.length()] += 1;
        CHECK(from_traces == from_enum);
    }
}

TEST_CASE("empty Euler product is the constant 1") {
    TruncatedSeries s = euler_product_series({}, 5, 5);
    CHECK(s == TruncatedSeries::constant(Rat(1), 5));
}

TEST_CASE("Euler product rejects orders beyond the prime horizon") {
    CHECK_THROWS_AS(euler_product_series({}, 5, 6), DomainError);
}

TEST_CASE("Euler product matches the determinant route on K4") {
    Graph k4 = make_complete_graph(4);
    std::vector<PrimeCycle> primes = enumerate_primes(k4, 6);
    TruncatedSeries euler = euler_product_series(primes, 6, 6);
    TruncatedSeries recip = reciprocal_series(reciprocal_poly(k4).q, 6);
    CHECK(euler == recip);
}

TEST_CASE("Euler product matches the published billiard polynomial") {
    IntPoly cyc({Int(1), Int(0), Int(-1)});
    IntPoly f({Int(1), Int(0), Int(3), Int(-8), Int(-4), Int(-32), Int(-8), Int(-32), Int(32),
               Int(0), Int(48)});
    IntPoly paper_q = cyc.pow(3) * f;

    std::vector<PrimeCycle> primes = enumerate_primes(make_billiard_graph(), 6);
    TruncatedSeries euler = euler_product_series(primes, 6, 6);
    CHECK(euler == reciprocal_series(paper_q, 6));
}

TEST_CASE("enumeration guard trips on absurd budgets") {
    CHECK_THROWS_AS(enumerate_primes(make_complete_graph(4), 8, 50), ResourceGuardError);
}
