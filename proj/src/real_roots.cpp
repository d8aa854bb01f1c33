// Exact real-rootedness: Sturm sign-variation count over rational arithmetic.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "indpoly/polynomial.hpp"

namespace indpoly {

namespace {

using RatPoly = std::vector<mpq_class>;  // index k -> coefficient of x^k, trimmed

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RatPoly& p) { return int(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * int(k));
    trim(d);
    return d;
}

// remainder of a by b, deg(b) >= 0
RatPoly rem(RatPoly a, const RatPoly& b) {
    while (deg(a) >= deg(b)) {
        mpq_class f = a.back() / b.back();
        int shift = deg(a) - deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        RatPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // make monic so exact division below is stable
    for (auto& c : a) c /= a.back();
    return a;
}

RatPoly divexact(RatPoly a, const RatPoly& b) {
    RatPoly q(deg(a) - deg(b) + 1, mpq_class(0));
    while (deg(a) >= deg(b)) {
        mpq_class f = a.back() / b.back();
        int shift = deg(a) - deg(b);
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

int sign_of(const mpq_class& v) { return sgn(v); }

}  // namespace

bool real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("real_rooted: zero polynomial");
    if (p.degree() == 0) return true;  // no roots at all

    RatPoly f;
    for (const auto& c : p.coeffs()) f.emplace_back(c);
    trim(f);

    RatPoly fp = derivative(f);
    RatPoly g = poly_gcd(f, fp);
    RatPoly q = deg(g) > 0 ? divexact(f, g) : f;  // square-free part; its roots
                                                  // are exactly the distinct roots of p

    int target = deg(q);
    if (target == 0) return true;

    // Sturm chain
    std::vector<RatPoly> chain;
    chain.push_back(q);
    chain.push_back(derivative(q));
    while (deg(chain.back()) > 0) {
        RatPoly r = rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }

    // variations at -inf and +inf from leading signs and degree parity
    int var_neg = 0, var_pos = 0;
    int prev_neg = 0, prev_pos = 0;
    for (const auto& s : chain) {
        if (s.empty()) continue;
        int lead = sign_of(s.back());
        int at_pos = lead;
        int at_neg = (deg(s) % 2 == 0) ? lead : -lead;
        if (prev_pos != 0 && at_pos != prev_pos) ++var_pos;
        if (prev_neg != 0 && at_neg != prev_neg) ++var_neg;
        prev_pos = at_pos;
        prev_neg = at_neg;
    }

    return (var_neg - var_pos) == target;
}

}  // namespace indpoly
