#pragma once

#include <memory>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

// Expression tree over graph constructors and operators. Immutable after
// construction; nodes are shared freely.
struct GraphExpr;
using ExprPtr = std::shared_ptr<const GraphExpr>;

struct GraphExpr {
    enum class Kind { Complete, Path, Cycle, Multipartite, Explicit, Union, Join, Corona };

    Kind kind;
    long long size = 0;            // Complete/Path/Cycle order
    std::vector<long long> parts;  // Multipartite part sizes, in order
    Graph graph;                   // Explicit
    std::vector<ExprPtr> children;
};

ExprPtr expr_complete(long long n);
ExprPtr expr_path(long long n);
ExprPtr expr_cycle(long long n);
ExprPtr expr_multipartite(std::vector<long long> parts);
ExprPtr expr_explicit(Graph g);
// Union/Join flatten nested nodes of the same kind; a single child is
// returned as-is, so invariant "union/join has >= 2 children" always holds.
ExprPtr expr_union(std::vector<ExprPtr> children);
ExprPtr expr_join(std::vector<ExprPtr> children);
ExprPtr expr_corona(ExprPtr child);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// total vertex count, computed without materializing anything
long long vertex_count(const ExprPtr& e);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

// Grammar:
//   expr := atom | INT "*" expr | "union(" expr ("," expr)* ")"
//         | "join(" expr ("," expr)* ")" | "corona(" expr ")"
//   atom := "K(" INT ")" | "P(" INT ")" | "C(" INT ")"
//         | "KM(" part ("," part)* ")" | "g6(" STRING ")"
//   part := INT | INT "^" INT        (size^multiplicity)
// INT "*" expr denotes the disjoint union of INT copies of expr.
ExprPtr parse_expr(std::string_view text);

// inverse printer: parse_expr(render_expr(e)) expands to an isomorphic graph
std::string render_expr(const ExprPtr& e);

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// materialize the expression; vertex ordering is children left-to-right with
// constructor-canonical internal order. Throws BudgetError when the vertex
// count exceeds `limit`.
Graph expand(const ExprPtr& e, long long limit);

}  // namespace indpoly
