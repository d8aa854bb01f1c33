#pragma once

#include <vector>

#include "indpoly/expr.hpp"
#include "indpoly/graph.hpp"

namespace indpoly::testcorpus {

// Every simple graph on exactly n vertices, one representative per
// isomorphism class (canonical = lexicographically smallest edge mask over
// all vertex permutations). Practical for n <= 6.
std::vector<Graph> all_graphs(int n);

// All isomorphism classes with 0..nmax vertices, in order of size.
std::vector<Graph> all_graphs_upto(int nmax);

// Deterministic pseudo-random graphs with orders in [nmin, nmax] and a
// per-graph edge density drawn from [0.15, 0.85].
std::vector<Graph> random_graphs(int count, int nmin, int nmax, unsigned seed);

// Deterministic pseudo-random expression trees whose expansion has at most
// max_vertices vertices (and at least one).
std::vector<ExprPtr> random_exprs(int count, long long max_vertices, unsigned seed);

// Every free tree on exactly n vertices, one per isomorphism class.
std::vector<Graph> all_trees(int n);

// Connected graphs of girth >= 6 (or acyclic), built as random trees plus
// extra edges that only close cycles of length >= 6.
std::vector<Graph> girth6_samples(int count, int nmin, int nmax, unsigned seed);

}  // namespace indpoly::testcorpus
