#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/expr.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// H_n: the join of four disjoint K_10 with the complete n-partite graph whose
// parts all have size 4. I(H_n) = n(1+x)^4 + (1+10x)^4 - n.
ExprPtr h_family(long long n);

// closed form I(H_n) = [1, 40+4n, 600+6n, 4000+4n, 10000+n]
Polynomial h_poly(long long n);

struct ScanWindows {
    // inclusive [lo, hi] runs of parameters where the property fails
    std::vector<std::pair<long long, long long>> non_unimodal;
    std::vector<std::pair<long long, long long>> non_log_concave;
};

// exact shape verdicts for I(H_n) over n in [n_lo, n_hi], from the closed
// form; the parallel kernel and its single-threaded reference
ScanWindows scan_h_family(long long n_lo, long long n_hi);
ScanWindows scan_h_family_serial(long long n_lo, long long n_hi);

// same windows for I(gq_literal(q)) over q in [q_lo, q_hi]
ScanWindows scan_gq_literal(long long q_lo, long long q_hi);

// (1 + 6844x + 10806x^2 + 10804x^3 + 11701x^4) * (1 + 1000k x)^k
Polynomial lemma3_poly(long long k);

// closed forms for the three top coefficients of lemma3_poly(k), k >= 1
BigInt lemma3_s_k2(long long k);  // s_{k+2} = 10^{3(k-2)} k^{k-1} (21633619701k - 11701)/2
BigInt lemma3_s_k3(long long k);  // s_{k+3} = 10^{3(k-1)} k^k 10815701
BigInt lemma3_s_k4(long long k);  // s_{k+4} = 11701 1000^k k^k

// q disjoint copies of K_{1000q} next to H_1701; its polynomial is exactly
// lemma3_poly(q)
ExprPtr gq_corrected(long long q);
// q disjoint copies of K_1000 next to H_1701, the construction as printed in
// the source; its polynomial is (1+1000x)^q * lemma3_poly(0)
ExprPtr gq_literal(long long q);
Polynomial gq_literal_poly(long long q);

// Join(e, e): connected, I(result) = 2 I(e) - 1, preserves alpha and
// well-coveredness
ExprPtr connected_double(const ExprPtr& e);

struct FamilyReport {
    std::string name;
    std::vector<std::pair<std::string, long long>> params;
    ExprPtr expr;  // null when the family member is a bare polynomial
    Polynomial poly;
    ShapeReport shape;
    std::optional<bool> well_covered;  // empty when there is no graph
    long long alpha = 0;
    bool connected = false;
    std::string note;
};

FamilyReport h_report(long long n);
FamilyReport gq_report(long long q, bool literal);
FamilyReport lemma3_report(long long k);

// a well-covered graph with stability number k whose polynomial dips at
// s_{k-1}: gq_corrected(k-4), joined with itself when connected is requested.
// every claim in the report is re-checked before returning.
FamilyReport counterexample_for_alpha(long long k, bool connected);

}  // namespace indpoly
