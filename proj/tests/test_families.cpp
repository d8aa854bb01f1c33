#include "doctest.h"

#include <stdexcept>

#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/families.hpp"
#include "indpoly/polynomial.hpp"

using namespace indpoly;

namespace {

Polynomial from_longs(std::initializer_list<long> cs) { return Polynomial(cs); }

}  // namespace

TEST_CASE("h family: closed form matches the expression engine") {
    for (long long n : {1LL, 2LL, 5LL, 10LL, 25LL, 100LL, 1701LL, 1999LL, 2452LL, 3000LL}) {
        CAPTURE(n);
        const Polynomial direct = indpoly_expr(h_family(n));
        CHECK(direct == h_poly(n));
        // spot-check the coefficient formulas independently
        const long m = static_cast<long>(n);
        CHECK(direct.coeff(0) == 1);
        CHECK(direct.coeff(1) == 40 + 4 * m);
        CHECK(direct.coeff(2) == 600 + 6 * m);
        CHECK(direct.coeff(3) == 4000 + 4 * m);
        CHECK(direct.coeff(4) == 10000 + m);
    }
}

TEST_CASE("h family: small members against the branching oracle") {
    for (long long n : {1LL, 2LL, 5LL}) {
        const Graph g = expand(h_family(n), 100000);
        CHECK(indpoly_branch(g) == h_poly(n));
        const auto r = is_well_covered(g);
        CHECK(r.well_covered);
        CHECK(r.alpha == 4);
        CHECK(r.omega == 10 + n);
    }
}

TEST_CASE("h family: domain errors") {
    CHECK_THROWS_AS(h_family(0), std::invalid_argument);
    CHECK_THROWS_AS(h_family(-3), std::invalid_argument);
    CHECK_THROWS_AS(h_family(20'000'000), std::invalid_argument);
    CHECK_THROWS_AS(h_poly(0), std::invalid_argument);
    CHECK_THROWS_AS(scan_h_family(10, 5), std::invalid_argument);
}

TEST_CASE("h family scan: exact failure windows over [1, 3000]") {
    const auto w = scan_h_family(1, 3000);
    REQUIRE(w.non_unimodal.size() == 1);
    CHECK(w.non_unimodal[0] == std::pair<long long, long long>{1701, 1999});
    REQUIRE(w.non_log_concave.size() == 1);
    CHECK(w.non_log_concave[0] == std::pair<long long, long long>{24, 2452});

    // the serial reference computes the same windows
    const auto ws = scan_h_family_serial(1, 3000);
    CHECK(ws.non_unimodal == w.non_unimodal);
    CHECK(ws.non_log_concave == w.non_log_concave);

    // boundary members behave as the windows claim
    CHECK(!shape(h_poly(1701)).unimodal);
    CHECK(!shape(h_poly(1999)).unimodal);
    CHECK(shape(h_poly(1700)).unimodal);
    CHECK(shape(h_poly(2000)).unimodal);
    CHECK(!shape(h_poly(24)).log_concave);
    CHECK(!shape(h_poly(2452)).log_concave);
    CHECK(shape(h_poly(23)).log_concave);
    CHECK(shape(h_poly(2453)).log_concave);
}

TEST_CASE("h family scan: windows clip to the requested range") {
    const auto w = scan_h_family(1690, 2010);
    REQUIRE(w.non_unimodal.size() == 1);
    CHECK(w.non_unimodal[0] == std::pair<long long, long long>{1701, 1999});
    REQUIRE(w.non_log_concave.size() == 1);
    CHECK(w.non_log_concave[0] == std::pair<long long, long long>{1690, 2010});

    const auto empty = scan_h_family(2600, 3000);
    CHECK(empty.non_unimodal.empty());
    CHECK(empty.non_log_concave.empty());
}

TEST_CASE("lemma3 polynomials: quartic seed and top-coefficient closed forms") {
    CHECK(lemma3_poly(0) == from_longs({1, 6844, 10806, 10804, 11701}));
    CHECK_THROWS_AS(lemma3_poly(-1), std::invalid_argument);
    CHECK_THROWS_AS(lemma3_s_k2(0), std::invalid_argument);

    CHECK(lemma3_s_k2(1) == BigInt(10816804));
    CHECK(lemma3_s_k2(2) == BigInt("43267227701"));

    for (long long k : {1LL, 2LL, 3LL, 5LL, 8LL, 13LL, 21LL, 40LL}) {
        CAPTURE(k);
        const Polynomial p = lemma3_poly(k);
        CHECK(p.degree() == static_cast<int>(k) + 4);
        CHECK(p.coeff(k + 2) == lemma3_s_k2(k));
        CHECK(p.coeff(k + 3) == lemma3_s_k3(k));
        CHECK(p.coeff(k + 4) == lemma3_s_k4(k));
        // the dip at the second-highest coefficient
        CHECK(p.coeff(k + 2) > p.coeff(k + 3));
        CHECK(p.coeff(k + 3) < p.coeff(k + 4));
        const auto s = shape(p);
        CHECK(!s.unimodal);
        REQUIRE(s.dip_index.has_value());
        CHECK(*s.dip_index == static_cast<int>(k) + 3);
    }
}

TEST_CASE("corrected family realizes the lemma3 polynomials exactly") {
    for (long long q : {0LL, 1LL, 2LL, 3LL, 7LL, 20LL, 40LL}) {
        CAPTURE(q);
        CHECK(indpoly_expr(gq_corrected(q)) == lemma3_poly(q));
    }
    // at q = 0 both constructions degenerate to the same base graph
    CHECK(expr_equal(gq_corrected(0), gq_literal(0)));
    CHECK(indpoly_expr(gq_literal(0)) == lemma3_poly(0));
}

TEST_CASE("literal family diverges from the corrected one for q >= 2") {
    // at q = 1 the two agree, because a single clique of size 1000q is K_1000
    CHECK(gq_literal_poly(1) == lemma3_poly(1));
    for (long long q : {2LL, 3LL, 5LL, 10LL}) {
        CAPTURE(q);
        const Polynomial lit = indpoly_expr(gq_literal(q));
        CHECK(lit == gq_literal_poly(q));
        CHECK(lit != lemma3_poly(q));
        CHECK(lit.degree() == static_cast<int>(q) + 4);
    }
}

TEST_CASE("literal family scan: non-unimodality dies out almost immediately") {
    const auto w = scan_gq_literal(1, 200);
    REQUIRE(w.non_unimodal.size() == 1);
    CHECK(w.non_unimodal[0] == std::pair<long long, long long>{1, 2});
    REQUIRE(w.non_log_concave.size() == 1);
    CHECK(w.non_log_concave[0] == std::pair<long long, long long>{1, 73});

    CHECK(!shape(gq_literal_poly(2)).unimodal);
    CHECK(shape(gq_literal_poly(3)).unimodal);
    // while the corrected family stays non-unimodal at every q
    for (long long q : {3LL, 10LL, 100LL, 200LL})
        CHECK(!shape(lemma3_poly(q)).unimodal);
}

TEST_CASE("counterexample constructions for every alpha >= 4") {
    CHECK_THROWS_AS(counterexample_for_alpha(3, false), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_for_alpha(3, true), std::invalid_argument);

    for (long long k = 4; k <= 20; ++k) {
        CAPTURE(k);
        for (bool connected : {false, true}) {
            CAPTURE(connected);
            const FamilyReport r = counterexample_for_alpha(k, connected);
            CHECK(r.alpha == k);
            // the base construction for alpha=4 has no side cliques and is
            // already connected; from alpha=5 on, the flag tracks the request
            CHECK(r.connected == (connected || k == 4));
            REQUIRE(r.well_covered.has_value());
            CHECK(*r.well_covered);
            CHECK(!r.shape.unimodal);
            REQUIRE(r.shape.dip_index.has_value());
            CHECK(*r.shape.dip_index == static_cast<int>(k) - 1);
            CHECK(r.poly.degree() == static_cast<int>(k));
            REQUIRE(r.expr != nullptr);
            CHECK(indpoly_expr(r.expr) == r.poly);
        }
        // the connected variant is the join of two disconnected ones:
        // I = 2 I_base - 1
        const Polynomial base = counterexample_for_alpha(k, false).poly;
        Polynomial doubled = scale(base, BigInt(2));
        doubled = add_scalar(doubled, BigInt(-1));
        CHECK(counterexample_for_alpha(k, true).poly == doubled);
    }
}

TEST_CASE("connected_double preserves the polynomial identity") {
    const auto e = parse_expr("union(C(5), K(3))");
    const Polynomial base = indpoly_expr(e);
    const Polynomial joined = indpoly_expr(connected_double(e));
    CHECK(joined == add_scalar(scale(base, BigInt(2)), BigInt(-1)));
}

TEST_CASE("family reports carry consistent metadata") {
    const auto h = h_report(25);
    CHECK(h.name == "h");
    REQUIRE(h.params.size() == 1);
    CHECK(h.params[0].first == "n");
    CHECK(h.params[0].second == 25);
    REQUIRE(h.expr != nullptr);
    CHECK(h.poly == h_poly(25));
    CHECK(h.alpha == 4);
    CHECK(h.connected);
    REQUIRE(h.well_covered.has_value());
    CHECK(*h.well_covered);

    const auto l = lemma3_report(3);
    CHECK(l.name == "lemma3");
    CHECK(l.expr == nullptr);  // a bare polynomial, no graph attached
    CHECK(l.poly == lemma3_poly(3));
    CHECK(!l.well_covered.has_value());
    CHECK(!l.note.empty());

    const auto gc = gq_report(2, false);
    CHECK(gc.name == "gq");
    CHECK(gc.poly == lemma3_poly(2));
    REQUIRE(gc.well_covered.has_value());
    CHECK(*gc.well_covered);
    CHECK(!gc.connected);

    const auto gl = gq_report(2, true);
    CHECK(gl.name == "gq_literal");
    CHECK(gl.poly == gq_literal_poly(2));
    CHECK(gl.poly != gc.poly);
}
