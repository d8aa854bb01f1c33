// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "goldens.hpp"
#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

using namespace indpoly;

namespace {

Polynomial from_long_vec(const std::vector<long>& cs) {
    std::vector<BigInt> v(cs.begin(), cs.end());
    return Polynomial(std::move(v));
}

BigInt bigpow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool fail(std::string& detail, const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
    return false;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------- criterion 1
bool criterion_goldens(std::string& detail) {
    bool ok = true;
    for (const auto& g : testcorpus::golden_polynomials()) {
        const auto t0 = std::chrono::steady_clock::now();
        const Polynomial expect = from_long_vec(g.coefficients);
        const ExprPtr e = parse_expr(g.expr);
        if (indpoly_expr(e) != expect) ok = fail(detail, g.name + ": expression engine mismatch");
        if (vertex_count(e) <= g.max_branch_vertices &&
            indpoly_branch(expand(e, 1000000)) != expect)
            ok = fail(detail, g.name + ": branch engine mismatch");
        const double ms = ms_since(t0);
        if (ms > 1000.0) ok = fail(detail, g.name + ": exceeded 1s");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 2
bool criterion_products(std::string& detail) {
    bool ok = true;
    for (const auto& p : testcorpus::golden_products()) {
        const Polynomial prod =
            mul(indpoly_expr(parse_expr(p.left)), indpoly_expr(parse_expr(p.right)));
        if (prod != from_long_vec(p.coefficients))
            ok = fail(detail, p.name + ": coefficient mismatch");
        const ShapeReport s = shape(prod);
        if (s.unimodal != p.expect_unimodal) ok = fail(detail, p.name + ": unimodal flag");
        if (s.log_concave != p.expect_log_concave)
            ok = fail(detail, p.name + ": log-concave flag");
        if (!p.expect_unimodal &&
            (!s.dip_index || *s.dip_index != p.expect_witness_index))
            ok = fail(detail, p.name + ": dip index");
        if (p.expect_unimodal && !p.expect_log_concave &&
            (!s.lc_violation_index || *s.lc_violation_index != p.expect_witness_index))
            ok = fail(detail, p.name + ": violation index");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 3
bool criterion_h_windows(std::string& detail) {
    const auto w = scan_h_family(1, 3000);
    using W = std::vector<std::pair<long long, long long>>;
    bool ok = true;
    if (w.non_unimodal != W{{1701, 1999}}) ok = fail(detail, "non-unimodal window wrong");
    if (w.non_log_concave != W{{24, 2452}}) ok = fail(detail, "non-log-concave window wrong");
    const auto ws = scan_h_family_serial(1, 3000);
    if (ws.non_unimodal != w.non_unimodal || ws.non_log_concave != w.non_log_concave)
        ok = fail(detail, "serial reference disagrees");
    return ok;
}

// ---------------------------------------------------------------- criterion 4
bool criterion_lemma3(std::string& detail) {
    bool ok = true;
    if (lemma3_poly(0) != Polynomial({1, 6844, 10806, 10804, 11701}))
        ok = fail(detail, "base quartic wrong");
    for (long long k = 1; k <= 40; ++k) {
        const Polynomial p = lemma3_poly(k);
        const BigInt s2 = p.coeff(k + 2), s3 = p.coeff(k + 3), s4 = p.coeff(k + 4);
        if (!(s2 > s3 && s3 < s4)) ok = fail(detail, "k=" + std::to_string(k) + ": no dip");
        if (s2 != lemma3_s_k2(k) || s3 != lemma3_s_k3(k) || s4 != lemma3_s_k4(k))
            ok = fail(detail, "k=" + std::to_string(k) + ": closed form mismatch");
        // the two positive differences that force the dip
        const long kl = static_cast<long>(k);
        const BigInt top = BigInt(885299) * kl * bigpow(BigInt(1000) * kl, unsigned(k - 1));
        if (s4 - s3 != top)
            ok = fail(detail, "k=" + std::to_string(k) + ": top difference mismatch");
        const BigInt low = (BigInt(2217701) * kl - 11701) *
                           bigpow(BigInt(10), 3 * unsigned(k - 1)) *
                           bigpow(BigInt(kl), unsigned(k - 1));
        if ((s2 - s3) * 2000 != low)
            ok = fail(detail, "k=" + std::to_string(k) + ": lower difference mismatch");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 5
bool criterion_corrected_family(std::string& detail) {
    bool ok = true;
    for (long long q = 0; q <= 40; ++q)
        if (indpoly_expr(gq_corrected(q)) != lemma3_poly(q))
            ok = fail(detail, "q=" + std::to_string(q) + ": corrected family mismatch");
    for (long long k = 4; k <= 20; ++k) {
        const FamilyReport plain = counterexample_for_alpha(k, false);
        const FamilyReport conn = counterexample_for_alpha(k, true);
        for (const FamilyReport* r : {&plain, &conn}) {
            if (r->alpha != k) ok = fail(detail, "k=" + std::to_string(k) + ": alpha");
            if (!r->well_covered || !*r->well_covered)
                ok = fail(detail, "k=" + std::to_string(k) + ": not well-covered");
            if (r->shape.unimodal || !r->shape.dip_index ||
                *r->shape.dip_index != int(k) - 1)
                ok = fail(detail, "k=" + std::to_string(k) + ": dip not verified");
        }
        if (!conn.connected || (k > 4 && plain.connected))
            ok = fail(detail, "k=" + std::to_string(k) + ": connected flags");
        if (conn.poly != add_scalar(scale(plain.poly, BigInt(2)), BigInt(-1)))
            ok = fail(detail, "k=" + std::to_string(k) + ": I != 2I - 1 under join");
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 6
bool criterion_oracles(std::string& detail) {
    bool ok = true;
    int exhaustive = 0;
    for (const Graph& g : testcorpus::all_graphs_upto(6)) {
        ++exhaustive;
        if (indpoly_bruteforce(g) != indpoly_branch(g))
            ok = fail(detail, "exhaustive corpus: engines disagree on order " +
                                  std::to_string(g.n()));
    }
    if (exhaustive < 209) ok = fail(detail, "exhaustive corpus too small");

    const auto randoms = testcorpus::random_graphs(200, 7, 16, 20260819);
    if (randoms.size() < 200) ok = fail(detail, "random corpus too small");
    for (const Graph& g : randoms)
        if (indpoly_bruteforce(g) != indpoly_branch(g))
            ok = fail(detail, "random corpus: engines disagree");

    const auto exprs = testcorpus::random_exprs(100, 16, 20260820);
    if (exprs.size() < 100) ok = fail(detail, "expression corpus too small");
    for (const auto& e : exprs)
        if (indpoly_expr(e) != indpoly_branch(expand(e, 100)))
            ok = fail(detail, "expression engine disagrees with branch on expansion");
    return ok;
}

// ---------------------------------------------------------------- criterion 7
bool criterion_properties(std::string& detail) {
    bool ok = true;
    std::vector<Graph> corpus = testcorpus::all_graphs_upto(6);
    for (Graph& g : testcorpus::random_graphs(200, 7, 16, 31337))
        corpus.push_back(std::move(g));

    for (const Graph& g : corpus) {
        const Polynomial p = indpoly_branch(g);
        for (int v = 0; v < g.n(); ++v)
            if (p != add(indpoly_branch(delete_vertex(g, v)),
                         shift_up(indpoly_branch(delete_closed_neighborhood(g, v)))))
                ok = fail(detail, "deletion identity violated");
        if (p.coeff(1) != g.n()) ok = fail(detail, "s_1 != n");
        long deg2 = 0;
        for (int v = 0; v < g.n(); ++v) deg2 += g.degree(v);
        if (p.coeff(2) != BigInt(g.n()) * (g.n() - 1) / 2 - deg2 / 2)
            ok = fail(detail, "s_2 != complement edge count");
        if (g.n() == 0) continue;
        const int a = alpha(g), w = omega(g);
        if (w <= a && p.coeff(a) > p.coeff(a - 1)) ok = fail(detail, "ordering of top coefficients");
        const auto wc = is_well_covered(g);
        if (wc.well_covered)
            for (int j = 0; j + 1 <= (a + 1) / 2; ++j)
                if (p.coeff(j) > p.coeff(j + 1)) ok = fail(detail, "well-covered prefix not rising");
        if (wc.well_covered && a == 3 && w <= 3 && !shape(p).log_concave)
            ok = fail(detail, "well-covered omega<=alpha=3 not log-concave");
        if (a == 2 && !real_rooted(p)) ok = fail(detail, "alpha=2 polynomial with complex roots");
        if (real_rooted(p) && !shape(p).log_concave)
            ok = fail(detail, "real-rooted but not log-concave");
    }

    // union/join identities on a small cross product
    const std::vector<Graph> pool = {path(4), cycle(5), complete(3), multipartite({2, 2})};
    for (const Graph& x : pool)
        for (const Graph& y : pool) {
            const Polynomial px = indpoly_branch(x), py = indpoly_branch(y);
            if (indpoly_branch(disjoint_union(x, y)) != mul(px, py))
                ok = fail(detail, "union identity violated");
            if (indpoly_branch(zykov_sum(x, y)) != add_scalar(add(px, py), BigInt(-1)))
                ok = fail(detail, "join identity violated");
        }

    // multiplicative closure of shape classes on random positive polynomials
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> len(3, 7);
    std::uniform_int_distribution<long> coef(1, 50);
    std::vector<Polynomial> lc, uni;
    while (lc.size() < 20 || uni.size() < 20) {
        std::vector<BigInt> cs(len(rng));
        for (auto& c : cs) c = coef(rng);
        Polynomial p(std::move(cs));
        const auto s = shape(p);
        if (s.log_concave)
            lc.push_back(p);
        else if (s.unimodal)
            uni.push_back(p);
    }
    int pairs = 0;
    for (size_t i = 0; i < 20; ++i)
        for (size_t j = 0; j < 20; ++j) {
            if (!shape(mul(lc[i], uni[j])).unimodal)
                ok = fail(detail, "log-concave x unimodal product not unimodal");
            if (!shape(mul(lc[i], lc[j])).log_concave)
                ok = fail(detail, "log-concave product not log-concave");
            pairs += 2;
        }
    if (pairs < 200) ok = fail(detail, "too few product pairs");
    return ok;
}

// ---------------------------------------------------------------- criterion 8
bool criterion_pendant_theorem(std::string& detail) {
    bool ok = true;
    int trees = 0;
    for (int n = 2; n <= 12; ++n)
        for (const Graph& t : testcorpus::all_trees(n)) {
            ++trees;
            if (is_well_covered(t).well_covered != pendant_matching(t))
                ok = fail(detail, "tree equivalence violated at order " + std::to_string(n));
        }
    if (trees < 986) ok = fail(detail, "tree corpus incomplete");

    const Graph c7 = cycle(7);
    int sampled = 0;
    for (const Graph& g : testcorpus::girth6_samples(80, 8, 16, 60606)) {
        if (!is_connected(g) || isomorphic(g, c7)) continue;
        const auto gi = girth(g);
        if (gi && *gi < 6) continue;
        ++sampled;
        if (is_well_covered(g).well_covered != pendant_matching(g))
            ok = fail(detail, "girth>=6 equivalence violated");
    }
    if (sampled < 60) ok = fail(detail, "girth>=6 sample too small");

    if (!is_well_covered(c7).well_covered) ok = fail(detail, "exceptional 7-cycle not well-covered");
    if (pendant_matching(c7)) ok = fail(detail, "7-cycle claims a pendant matching");
    return ok;
}

// ---------------------------------------------------------------- criterion 9
bool criterion_certifier(std::string& detail) {
    bool ok = true;
    std::vector<Graph> corpus = testcorpus::all_graphs_upto(6);
    for (Graph& g : testcorpus::random_graphs(120, 7, 12, 99))
        corpus.push_back(std::move(g));
    for (int n = 2; n <= 9; ++n)
        for (Graph& t : testcorpus::all_trees(n)) corpus.push_back(std::move(t));

    int certified = 0, wc3 = 0;
    for (const Graph& g : corpus) {
        const auto cert = certify_unimodal(g);
        const auto s = shape(indpoly_branch(g));
        if (cert) {
            ++certified;
            if (!s.unimodal) ok = fail(detail, "certificate issued for non-unimodal polynomial");
            if (cert->conclusion == CertConclusion::LogConcave && !s.log_concave)
                ok = fail(detail, "log-concave certificate for non-log-concave polynomial");
        }
        const auto wc = is_well_covered(g);
        if (wc.well_covered && wc.alpha <= 3) {
            ++wc3;
            if (!cert) ok = fail(detail, "well-covered alpha<=3 graph left uncertified");
        }
    }
    if (certified == 0 || wc3 == 0) ok = fail(detail, "corpus exercised no certificates");

    if (!certify_unimodal(multipartite({3, 3, 3})))
        ok = fail(detail, "tripartite K(3,3,3) not certified");
    if (!certify_unimodal(disjoint_union(cycle(7), cycle(7))))
        ok = fail(detail, "pair of 7-cycles not certified");
    return ok;
}

// --------------------------------------------------------------- criterion 10
bool criterion_literal_pin(std::string& detail) {
    bool ok = true;
    const auto w = scan_gq_literal(1, 200);
    using W = std::vector<std::pair<long long, long long>>;
    // regression pin: first computed by this implementation, then reviewed
    // against the top-coefficient analysis (the dip closes from q = 3 on)
    if (w.non_unimodal != W{{1, 2}})
        ok = fail(detail, "literal-family non-unimodal set drifted from {1, 2}");
    for (long long q = 1; q <= 200; ++q)
        if (shape(lemma3_poly(q)).unimodal)
            ok = fail(detail, "corrected family unimodal at q=" + std::to_string(q));
    return ok;
}

struct Criterion {
    int number;
    std::string description;
    long long limit_ms;  // 0 = no stated budget
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "sixteen golden polynomials reproduce exactly on both engines", 0,
         criterion_goldens},
        {2, "product counterexamples match and their shape defects sit at index 5", 1000,
         criterion_products},
        {3, "H-family scan finds exactly [1701,1999] and [24,2452] over [1,3000]", 10000,
         criterion_h_windows},
        {4, "lemma3 polynomials dip with closed-form top coefficients for k in 0..40", 5000,
         criterion_lemma3},
        {5, "corrected family realizes lemma3 exactly; counterexamples for alpha 4..20", 10000,
         criterion_corrected_family},
        {6, "three engines agree on exhaustive, random, and expression corpora", 30000,
         criterion_oracles},
        {7, "identity and shape-theorem property suites report zero violations", 0,
         criterion_properties},
        {8, "well-covered <=> pendant matching on all small trees and girth>=6 samples", 30000,
         criterion_pendant_theorem},
        {9, "certifier sound on the full corpus and complete on its target classes", 0,
         criterion_certifier},
        {10, "literal-family non-unimodal set pinned to {1,2}; corrected family never unimodal", 0,
         criterion_literal_pin},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            ok = fail(detail, std::string("exception: ") + e.what());
        }
        const double ms = ms_since(t0);
        if (c.limit_ms > 0 && ms > double(c.limit_ms)) {
            ok = fail(detail, "time budget " + std::to_string(c.limit_ms) + " ms exceeded");
        }
        std::printf("CRITERION %2d %s (%.0f ms) %s\n", c.number, ok ? "PASS" : "FAIL", ms,
                    c.description.c_str());
        if (!ok) std::printf("             -> %s\n", detail.c_str());
        all_ok = all_ok && ok;
    }
    std::printf("ACCEPTANCE: %s\n", all_ok ? "all criteria passed" : "FAILURES PRESENT");
    return all_ok ? 0 : 1;
}
