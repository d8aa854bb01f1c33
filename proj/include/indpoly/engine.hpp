#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "indpoly/bitset.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Thrown when a work limit cancels a branch computation part way through.
// Recoverable: callers report the record as failed and move on.
struct EngineLimitError : std::runtime_error {
    explicit EngineLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Memoization table for one top-level branch computation: key is the bitset of
// surviving vertices of the root graph. Never shared between top-level calls.
using MemoCache = std::unordered_map<Bitset, Polynomial, BitsetHash>;

struct BranchStats {
    long long nodes = 0;
    long long memo_hits = 0;
};

inline constexpr int kBruteforceMaxVertices = 30;
inline constexpr long long kDefaultBudget = 10000;  // expansion budget, in vertices

// Subset enumeration: counts stable sets of every size directly. The oracle the
// other engines are tested against; guarded at 30 vertices.
Polynomial indpoly_bruteforce(const Graph& g);
// Single-threaded reference for the parallel kernel above.
Polynomial indpoly_bruteforce_serial(const Graph& g);

// I(G) = I(G - v) + x * I(G - N[v]) on a maximum-degree pivot v, connected
// components computed independently and multiplied, results memoized per call.
// node_limit < 0 runs unbounded; otherwise EngineLimitError after that many
// recursion nodes.
Polynomial indpoly_branch(const Graph& g, long long node_limit = -1,
                          BranchStats* stats = nullptr);

// Symbolic evaluation over the expression tree: union is a product, join is
// sum minus (parts - 1), complete and multipartite nodes use closed forms.
// Everything else is expanded (within `budget` vertices) and branched on.
Polynomial indpoly_expr(const ExprPtr& e, long long budget = kDefaultBudget,
                        long long node_limit = -1);

// Number of stable sets of size k; coefficient k of indpoly_branch(g).
BigInt stable_count(const Graph& g, int k);

}  // namespace indpoly
