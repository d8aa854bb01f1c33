#include "doctest.h"

#include <random>
#include <vector>

#include "corpus.hpp"
#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

using namespace indpoly;

namespace {

std::vector<Graph> property_corpus() {
    std::vector<Graph> corpus = testcorpus::all_graphs_upto(6);
    for (Graph& g : testcorpus::random_graphs(60, 7, 14, 424242))
        corpus.push_back(std::move(g));
    return corpus;
}

long edge_count(const Graph& g) {
    long twice = 0;
    for (int v = 0; v < g.n(); ++v) twice += g.degree(v);
    return twice / 2;
}

}  // namespace

TEST_CASE("vertex deletion identity holds at every vertex of every corpus graph") {
    for (const Graph& g : property_corpus()) {
        const Polynomial whole = indpoly_branch(g);
        for (int v = 0; v < g.n(); ++v) {
            const Polynomial without = indpoly_branch(delete_vertex(g, v));
            const Polynomial closed = indpoly_branch(delete_closed_neighborhood(g, v));
            CHECK(whole == add(without, shift_up(closed)));
        }
    }
}

TEST_CASE("union multiplies and join splices the polynomials") {
    const std::vector<Graph> pool = {path(4), cycle(5), complete(3),
                                     multipartite({2, 2}), Graph(2)};
    for (const Graph& a : pool) {
        const Polynomial pa = indpoly_branch(a);
        for (const Graph& b : pool) {
            const Polynomial pb = indpoly_branch(b);
            CHECK(indpoly_branch(disjoint_union(a, b)) == mul(pa, pb));
            CHECK(indpoly_branch(zykov_sum(a, b)) ==
                  add_scalar(add(pa, pb), BigInt(-1)));
        }
    }
}

TEST_CASE("low coefficients count vertices and complement edges") {
    for (const Graph& g : property_corpus()) {
        const Polynomial p = indpoly_branch(g);
        CHECK(p.coeff(0) == 1);
        CHECK(p.coeff(1) == g.n());
        const long non_edges = static_cast<long>(g.n()) * (g.n() - 1) / 2 - edge_count(g);
        CHECK(p.coeff(2) == non_edges);
        CHECK(p.coeff(2) == edge_count(complement(g)));
    }
}

TEST_CASE("small clique number forces the top coefficient down") {
    // whenever omega <= alpha, s_alpha <= s_{alpha-1}
    int applicable = 0;
    for (const Graph& g : property_corpus()) {
        if (g.n() == 0) continue;
        const int a = alpha(g);
        if (omega(g) > a) continue;
        ++applicable;
        const Polynomial p = indpoly_branch(g);
        CHECK(p.coeff(a) <= p.coeff(a - 1));
        const auto fact = lemma2_check(g);
        CHECK(fact.hypothesis_met);
        CHECK(fact.holds);
    }
    CHECK(applicable > 100);
}

TEST_CASE("well-covered polynomials rise through the first half") {
    int applicable = 0;
    for (const Graph& g : property_corpus()) {
        const auto r = is_well_covered(g);
        if (!r.well_covered || g.n() == 0) continue;
        ++applicable;
        const Polynomial p = indpoly_branch(g);
        const int half = static_cast<int>((r.alpha + 1) / 2);
        for (int j = 0; j + 1 <= half; ++j) CHECK(p.coeff(j) <= p.coeff(j + 1));
        const auto fact = prop1_check(g);
        CHECK(fact.hypothesis_met);
        CHECK(fact.holds);
    }
    CHECK(applicable > 50);
}

TEST_CASE("well-covered with omega <= alpha = 3 is log-concave") {
    int applicable = 0;
    for (const Graph& g : property_corpus()) {
        const auto r = is_well_covered(g);
        if (!r.well_covered || r.alpha != 3 || r.omega > 3) continue;
        ++applicable;
        CHECK(shape(indpoly_branch(g)).log_concave);
    }
    CHECK(applicable > 0);
}

TEST_CASE("stability number two forces real roots") {
    int applicable = 0;
    for (const Graph& g : property_corpus()) {
        if (g.n() == 0 || alpha(g) != 2) continue;
        ++applicable;
        const Polynomial p = indpoly_branch(g);
        CHECK(real_rooted(p));
        CHECK(p.coeff(1) * p.coeff(1) >= 4 * p.coeff(2));
    }
    CHECK(applicable > 30);
    // ...and the pattern genuinely stops at 2: a stability-3 witness fails
    CHECK(!real_rooted(indpoly_branch(multipartite({1, 3}))));
}

TEST_CASE("real-rooted positive polynomials are log-concave with no internal zeros") {
    int applicable = 0;
    for (const Graph& g : property_corpus()) {
        const Polynomial p = indpoly_branch(g);
        if (!real_rooted(p)) continue;
        ++applicable;
        const auto s = shape(p);
        CHECK(s.log_concave);
        CHECK(s.unimodal);
        for (int k = 0; k <= p.degree(); ++k) CHECK(p.coeff(k) > 0);
    }
    CHECK(applicable > 100);
}

TEST_CASE("products of log-concave and unimodal polynomials stay in class") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> len(3, 8);
    std::uniform_int_distribution<long> coef(1, 60);

    std::vector<Polynomial> lc_pool, uni_pool;
    while (lc_pool.size() < 40 || uni_pool.size() < 40) {
        std::vector<BigInt> cs(len(rng));
        for (auto& c : cs) c = coef(rng);
        Polynomial p(std::move(cs));
        const auto s = shape(p);
        if (s.log_concave && lc_pool.size() < 60)
            lc_pool.push_back(p);
        else if (s.unimodal && !s.log_concave && uni_pool.size() < 60)
            uni_pool.push_back(p);
    }

    int pairs = 0;
    for (const auto& a : lc_pool) {
        for (const auto& b : uni_pool) {
            CHECK(shape(mul(a, b)).unimodal);
            ++pairs;
        }
        for (const auto& b : lc_pool) {
            CHECK(shape(mul(a, b)).log_concave);
            ++pairs;
        }
    }
    CHECK(pairs >= 400);
}

TEST_CASE("claw-free graphs have log-concave polynomials") {
    int applicable = 0;
    for (const Graph& g : property_corpus()) {
        if (g.n() > 12 || !claw_free(g)) continue;
        ++applicable;
        CHECK(shape(indpoly_branch(g)).log_concave);
    }
    for (int n = 3; n <= 12; ++n) {
        CHECK(shape(indpoly_branch(cycle(n))).log_concave);
        CHECK(shape(indpoly_branch(path(n))).log_concave);
    }
    CHECK(applicable > 100);
}
