#pragma once

#include <vector>

#include "indpoly/bitset.hpp"

namespace indpoly {

// Simple undirected graph over vertices 0..n-1, adjacency kept as one bitset
// row per vertex. Rows are always symmetric and loop-free; add_edge is the
// only mutator and maintains both.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n), rows_(n, Bitset(n)) {}

    int n() const { return n_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& row(int v) const { return rows_[v]; }

    int degree(int v) const { return rows_[v].count(); }
    long long edge_count() const;
    std::vector<int> neighbors(int v) const { return rows_[v].to_indices(); }
    std::vector<std::pair<int, int>> edges() const;

    // symmetry and loop-freeness; used by property tests
    bool valid() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_;
    std::vector<Bitset> rows_;
};

// structured constructors
Graph complete(int n);
Graph multipartite(const std::vector<int>& parts);
Graph path(int n);
Graph cycle(int n);

// operators
Graph disjoint_union(const Graph& g, const Graph& h);
Graph zykov_sum(const Graph& g, const Graph& h);
Graph corona_k1(const Graph& g);
Graph complement(const Graph& g);
Graph delete_vertex(const Graph& g, int v);
Graph delete_closed_neighborhood(const Graph& g, int v);

// induced subgraph on the set bits of `keep`, indices compacted in order
Graph induced_subgraph(const Graph& g, const Bitset& keep);

// connected components as vertex sets, ordered by smallest member
std::vector<Bitset> connected_components(const Graph& g);
std::vector<Bitset> connected_components_within(const Graph& g, const Bitset& sub);
bool is_connected(const Graph& g);

// backtracking isomorphism test, guarded at 20 vertices
bool isomorphic(const Graph& g, const Graph& h);

}  // namespace indpoly
