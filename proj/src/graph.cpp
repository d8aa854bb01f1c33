#include "indpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace indpoly {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    rows_[u].set(v);
    rows_[v].set(u);
}

long long Graph::edge_count() const {
    long long d = 0;
    for (int v = 0; v < n_; ++v) d += degree(v);
    return d / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
    return out;
}

bool Graph::valid() const {
    for (int u = 0; u < n_; ++u) {
        if (rows_[u].test(u)) return false;
        for (int v = rows_[u].first(); v >= 0; v = rows_[u].next(v))
            if (!rows_[v].test(u)) return false;
    }
    return true;
}

Graph complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: negative order");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite: empty part list");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("multipartite: part of size < 1");
    long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    if (total > 1'000'000) throw std::invalid_argument("multipartite: too many vertices");
    Graph g{int(total)};
    // vertices laid out part by part; edges between distinct parts only
    int a_start = 0;
    for (size_t a = 0; a < parts.size(); ++a) {
        int b_start = a_start + parts[a];
        for (size_t b = a + 1; b < parts.size(); ++b) {
            for (int u = a_start; u < a_start + parts[a]; ++u)
                for (int v = b_start; v < b_start + parts[b]; ++v) g.add_edge(u, v);
            b_start += parts[b];
        }
        a_start += parts[a];
    }
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: order must be >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph r(g.n() + h.n());
    for (auto [u, v] : g.edges()) r.add_edge(u, v);
    for (auto [u, v] : h.edges()) r.add_edge(g.n() + u, g.n() + v);
    return r;
}

Graph zykov_sum(const Graph& g, const Graph& h) {
    Graph r = disjoint_union(g, h);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < h.n(); ++v) r.add_edge(u, g.n() + v);
    return r;
}

Graph corona_k1(const Graph& g) {
    Graph r(2 * g.n());
    for (auto [u, v] : g.edges()) r.add_edge(u, v);
    for (int v = 0; v < g.n(); ++v) r.add_edge(v, g.n() + v);
    return r;
}

Graph complement(const Graph& g) {
    Graph r(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) r.add_edge(u, v);
    return r;
}

Graph induced_subgraph(const Graph& g, const Bitset& keep) {
    std::vector<int> idx = keep.to_indices();
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = int(i);
    Graph r(int(idx.size()));
    for (int u : idx)
        for (int v = g.row(u).next(u); v >= 0; v = g.row(u).next(v))
            if (pos[v] >= 0) r.add_edge(pos[u], pos[v]);
    return r;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("delete_vertex: vertex out of range");
    Bitset keep(g.n());
    keep.set_all();
    keep.reset(v);
    return induced_subgraph(g, keep);
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.n())
        throw std::invalid_argument("delete_closed_neighborhood: vertex out of range");
    Bitset keep(g.n());
    keep.set_all();
    keep.and_not(g.row(v));
    keep.reset(v);
    return induced_subgraph(g, keep);
}

std::vector<Bitset> connected_components_within(const Graph& g, const Bitset& sub) {
    std::vector<Bitset> comps;
    Bitset left = sub;
    while (true) {
        int s = left.first();
        if (s < 0) break;
        Bitset comp(g.n());
        Bitset frontier(g.n());
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            Bitset nxt(g.n());
            for (int v = frontier.first(); v >= 0; v = frontier.next(v)) nxt |= g.row(v);
            nxt &= left;
            nxt.and_not(comp);
            frontier = nxt;
        }
        left.and_not(comp);
        comps.push_back(comp);
    }
    return comps;
}

std::vector<Bitset> connected_components(const Graph& g) {
    Bitset all(g.n());
    all.set_all();
    return connected_components_within(g, all);
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return connected_components(g).size() == 1;
}

namespace {

bool extend_iso(const Graph& g, const Graph& h, std::vector<int>& map, std::vector<bool>& used,
                int u) {
    if (u == g.n()) return true;
    for (int w = 0; w < h.n(); ++w) {
        if (used[w] || g.degree(u) != h.degree(w)) continue;
        bool ok = true;
        for (int p = 0; p < u; ++p)
            if (g.adjacent(p, u) != h.adjacent(map[p], w)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[u] = w;
        used[w] = true;
        if (extend_iso(g, h, map, used, u + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n() > 20 || h.n() > 20)
        throw std::invalid_argument("isomorphic: brute force is guarded at 20 vertices");
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.n(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> map(g.n(), -1);
    std::vector<bool> used(h.n(), false);
    return extend_iso(g, h, map, used, 0);
}

}  // namespace indpoly
