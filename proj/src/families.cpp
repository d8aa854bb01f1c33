#include "indpoly/families.hpp"

#include <cstdlib>
#include <stdexcept>

#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"

namespace indpoly {

namespace {

constexpr long long kMaxHParts = 10'000'000;

ExprPtr four_k10() {
    std::vector<ExprPtr> copies(4, expr_complete(10));
    return expr_union(std::move(copies));
}

}  // namespace

ExprPtr h_family(long long n) {
    if (n < 1) throw std::invalid_argument("h_family: n must be at least 1");
    if (n > kMaxHParts) throw std::invalid_argument("h_family: n too large to represent");
    std::vector<long long> parts(size_t(n), 4);
    return expr_join({four_k10(), expr_multipartite(std::move(parts))});
}

Polynomial h_poly(long long n) {
    if (n < 1) throw std::invalid_argument("h_poly: n must be at least 1");
    std::vector<BigInt> c{1, 40 + 4 * BigInt(static_cast<long>(n)), 600 + 6 * BigInt(static_cast<long>(n)),
                          4000 + 4 * BigInt(static_cast<long>(n)), 10000 + BigInt(static_cast<long>(n))};
    return Polynomial(std::move(c));
}

namespace {

ScanWindows compress_windows(long long lo, const std::vector<uint8_t>& nu,
                             const std::vector<uint8_t>& nlc) {
    ScanWindows w;
    auto runs = [lo](const std::vector<uint8_t>& flags) {
        std::vector<std::pair<long long, long long>> out;
        for (size_t i = 0; i < flags.size();) {
            if (!flags[i]) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < flags.size() && flags[j]) ++j;
            out.emplace_back(lo + static_cast<long long>(i), lo + static_cast<long long>(j) - 1);
            i = j;
        }
        return out;
    };
    w.non_unimodal = runs(nu);
    w.non_log_concave = runs(nlc);
    return w;
}

void check_range(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("scan: empty range, lo > hi");
}

}  // namespace

ScanWindows scan_h_family(long long n_lo, long long n_hi) {
    check_range(n_lo, n_hi);
    const long long m = n_hi - n_lo + 1;
    std::vector<uint8_t> nu(size_t(m), 0), nlc(size_t(m), 0);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < m; ++i) {
        const ShapeReport rep = shape(h_poly(n_lo + i));
        nu[size_t(i)] = !rep.unimodal;
        nlc[size_t(i)] = !rep.log_concave;
    }
    return compress_windows(n_lo, nu, nlc);
}

ScanWindows scan_h_family_serial(long long n_lo, long long n_hi) {
    check_range(n_lo, n_hi);
    const long long m = n_hi - n_lo + 1;
    std::vector<uint8_t> nu(size_t(m), 0), nlc(size_t(m), 0);
    for (long long i = 0; i < m; ++i) {
        const ShapeReport rep = shape(h_poly(n_lo + i));
        nu[size_t(i)] = !rep.unimodal;
        nlc[size_t(i)] = !rep.log_concave;
    }
    return compress_windows(n_lo, nu, nlc);
}

ScanWindows scan_gq_literal(long long q_lo, long long q_hi) {
    check_range(q_lo, q_hi);
    const long long m = q_hi - q_lo + 1;
    std::vector<uint8_t> nu(size_t(m), 0), nlc(size_t(m), 0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < m; ++i) {
        const ShapeReport rep = shape(gq_literal_poly(q_lo + i));
        nu[size_t(i)] = !rep.unimodal;
        nlc[size_t(i)] = !rep.log_concave;
    }
    return compress_windows(q_lo, nu, nlc);
}

Polynomial lemma3_poly(long long k) {
    if (k < 0) throw std::invalid_argument("lemma3_poly: k must be nonnegative");
    const Polynomial quartic({1, 6844, 10806, 10804, 11701});
    std::vector<BigInt> lin{1, BigInt(1000) * static_cast<long>(k)};
    return mul(quartic, power(Polynomial(std::move(lin)), k));
}

namespace {

BigInt ipow(long long base, unsigned long e) {
    BigInt r;
    const BigInt b(static_cast<long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// 10^(3e) as an exact rational; e may be negative for the smallest k
mpq_class pow10_3(long long e) {
    const BigInt p = ipow(10, static_cast<unsigned long>(3 * std::llabs(e)));
    return e >= 0 ? mpq_class(p) : mpq_class(1, p);
}

BigInt to_integer(const mpq_class& v, const char* what) {
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error(std::string(what) + ": not an integer");
    return c.get_num();
}

void require_k1(long long k, const char* what) {
    if (k < 1) throw std::invalid_argument(std::string(what) + ": requires k >= 1");
}

}  // namespace

BigInt lemma3_s_k2(long long k) {
    require_k1(k, "lemma3_s_k2");
    const mpq_class v = pow10_3(k - 2) * ipow(k, static_cast<unsigned long>(k - 1)) *
                        (BigInt(21633619701L) * static_cast<long>(k) - 11701) / 2;
    return to_integer(v, "lemma3_s_k2");
}

BigInt lemma3_s_k3(long long k) {
    require_k1(k, "lemma3_s_k3");
    const mpq_class v = pow10_3(k - 1) * ipow(k, static_cast<unsigned long>(k)) * 10815701;
    return to_integer(v, "lemma3_s_k3");
}

BigInt lemma3_s_k4(long long k) {
    require_k1(k, "lemma3_s_k4");
    return BigInt(11701) * ipow(1000, static_cast<unsigned long>(k)) *
           ipow(k, static_cast<unsigned long>(k));
}

ExprPtr gq_corrected(long long q) {
    if (q < 0) throw std::invalid_argument("gq_corrected: q must be nonnegative");
    if (q == 0) return h_family(1701);
    std::vector<ExprPtr> children(size_t(q), expr_complete(1000 * q));
    children.push_back(h_family(1701));
    return expr_union(std::move(children));
}

ExprPtr gq_literal(long long q) {
    if (q < 0) throw std::invalid_argument("gq_literal: q must be nonnegative");
    if (q == 0) return h_family(1701);
    std::vector<ExprPtr> children(size_t(q), expr_complete(1000));
    children.push_back(h_family(1701));
    return expr_union(std::move(children));
}

Polynomial gq_literal_poly(long long q) {
    if (q < 0) throw std::invalid_argument("gq_literal_poly: q must be nonnegative");
    return mul(power(Polynomial({1, 1000}), q), lemma3_poly(0));
}

ExprPtr connected_double(const ExprPtr& e) { return expr_join({e, e}); }

namespace {

FamilyReport base_report(std::string name,
                         std::vector<std::pair<std::string, long long>> params, ExprPtr expr,
                         Polynomial poly) {
    FamilyReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.expr = std::move(expr);
    r.poly = std::move(poly);
    r.shape = shape(r.poly);
    if (r.expr) {
        const ExprVerdict v = well_covered_expr(r.expr);
        if (v.decided) r.well_covered = v.well_covered;
        r.alpha = expr_alpha(r.expr);
    } else {
        r.alpha = r.poly.degree();
    }
    return r;
}

}  // namespace

FamilyReport h_report(long long n) {
    ExprPtr e = h_family(n);
    FamilyReport r = base_report("h", {{"n", n}}, e, indpoly_expr(e));
    r.connected = true;  // a join with non-empty parts is connected
    return r;
}

FamilyReport gq_report(long long q, bool literal) {
    ExprPtr e = literal ? gq_literal(q) : gq_corrected(q);
    FamilyReport r = base_report(literal ? "gq_literal" : "gq",
                                 {{"q", q}}, e, indpoly_expr(e));
    r.connected = q == 0;
    return r;
}

FamilyReport lemma3_report(long long k) {
    FamilyReport r = base_report("lemma3", {{"k", k}}, nullptr, lemma3_poly(k));
    r.note = "bare polynomial; realized as a graph by the gq family";
    return r;
}

FamilyReport counterexample_for_alpha(long long k, bool connected) {
    if (k < 4)
        throw std::invalid_argument("counterexample_for_alpha: no construction below alpha = 4");
    const long long q = k - 4;
    ExprPtr e = gq_corrected(q);
    if (connected) e = connected_double(e);

    FamilyReport r = base_report("counterexample",
                                 {{"alpha", k}, {"connected", connected ? 1 : 0}}, e,
                                 indpoly_expr(e));
    r.connected = connected || q == 0;

    // every claim is re-checked before the report leaves this function
    if (!r.well_covered || !*r.well_covered)
        throw std::logic_error("counterexample_for_alpha: construction not well-covered");
    if (r.alpha != k)
        throw std::logic_error("counterexample_for_alpha: alpha mismatch");
    if (r.poly.degree() != k)
        throw std::logic_error("counterexample_for_alpha: degree mismatch");
    if (!(r.poly.coeff(int(k) - 2) > r.poly.coeff(int(k) - 1) &&
          r.poly.coeff(int(k) - 1) < r.poly.coeff(int(k))))
        throw std::logic_error("counterexample_for_alpha: expected dip at s_{alpha-1}");
    if (r.shape.unimodal)
        throw std::logic_error("counterexample_for_alpha: polynomial unexpectedly unimodal");

    r.note = "well-covered, alpha=" + std::to_string(k) + ", dip at s_" + std::to_string(k - 1) +
             "; the join construction yields connected counterexamples for every alpha >= 4";
    return r;
}

}  // namespace indpoly
