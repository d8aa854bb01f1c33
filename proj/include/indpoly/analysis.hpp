#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indpoly/engine.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Exact stability number. Exponential worst case; disjoint components and
// join factors (connected components of the complement) are decomposed first,
// so graphs built from complete/multipartite blocks resolve without branching.
int alpha(const Graph& g);

// Clique number, computed as alpha of the complement.
int omega(const Graph& g);

// Length of a shortest cycle; empty optional for acyclic graphs.
std::optional<int> girth(const Graph& g);

// True iff no vertex has three pairwise non-adjacent neighbors.
bool claw_free(const Graph& g);

// Enumerates every inclusion-maximal stable set exactly once, in a fixed
// deterministic order. Return false from the visitor to stop early.
void maximal_stable_sets(const Graph& g, const std::function<bool(const Bitset&)>& visit);
std::vector<std::vector<int>> maximal_stable_sets(const Graph& g);

// Do the pendant edges (edges at a degree-1 vertex) form a perfect matching?
bool pendant_matching(const Graph& g);

struct WellCoverReport {
    int alpha = 0;
    int omega = 0;
    bool well_covered = false;
    bool very_well_covered = false;
    std::optional<int> girth;  // empty = acyclic
    bool pendant_matching = false;
    // two maximal stable sets of different sizes, when not well-covered
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

WellCoverReport is_well_covered(const Graph& g);

struct TheoremCheck {
    // connected, girth >= 6 or acyclic, not C_7, not K_1
    bool applicable = false;
    bool well_covered = false;
    bool pendant_matching = false;
    bool holds = false;  // well_covered == pendant_matching; meaningful when applicable
};

// The well-coveredness criterion for connected graphs of girth at least 6:
// outside the two exceptional graphs, well-covered is equivalent to the
// pendant edges forming a perfect matching.
TheoremCheck pendant_matching_theorem_check(const Graph& g);

// Structural well-coveredness verdict on an expression, without expanding:
// complete graphs, equal-part multipartite graphs and coronas are
// well-covered; a union is well-covered iff every part is (alpha adds up);
// a join is well-covered iff every non-empty part is, with equal alpha.
struct ExprVerdict {
    bool decided = false;  // false: no structural rule applies, expand instead
    bool well_covered = false;
    long long alpha = 0;  // filled when decided
};

ExprVerdict well_covered_expr(const ExprPtr& e);

// Structural alpha/omega over the expression tree (unions add, joins take the
// max / add, closed forms for the atoms); explicit graphs fall back to the
// exact solver.
long long expr_alpha(const ExprPtr& e);
long long expr_omega(const ExprPtr& e);

struct CheckedFact {
    bool hypothesis_met = false;
    bool holds = false;  // meaningful when the hypothesis is met
    std::string detail;
};

// omega(G) <= alpha(G) forces s_alpha <= s_{alpha-1}.
CheckedFact lemma2_check(const Graph& g);
// well-covered forces s_0 <= s_1 <= ... <= s_{ceil(alpha/2)}.
CheckedFact prop1_check(const Graph& g);

enum class CertRule {
    AlphaLe2Components,
    WCAlpha3,
    WCAlpha4Disconnected,
    Alpha5UnionRule,
    OmegaLeAlphaLe5WC,
    Alpha6ComponentRule,
    ClawFree,
    RealRootedNewton,
    KeilsonGerberComposition,
    DirectComputation,
};

enum class CertConclusion { Unimodal, LogConcave };

std::string cert_rule_name(CertRule r);
std::string cert_conclusion_name(CertConclusion c);

// Proof tree for a unimodality (or log-concavity) claim: leaves are checked
// facts, internal nodes compose sub-certificates via the product theorems.
struct Certificate {
    CertRule rule;
    CertConclusion conclusion;
    std::vector<std::string> facts;
    std::vector<Certificate> children;
};

// Tries the sufficient conditions cheapest-first and returns the first
// certificate that applies; whenever the polynomial is computable the
// conclusion is audited against it before being returned. An empty optional
// means no rule applies — it never implies non-unimodality.
std::optional<Certificate> certify_unimodal(const Graph& g);
std::optional<Certificate> certify_unimodal(const ExprPtr& e, long long budget = kDefaultBudget);

}  // namespace indpoly
