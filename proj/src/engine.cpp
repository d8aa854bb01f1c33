#include "indpoly/engine.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace indpoly {

namespace {

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) adj[v] |= uint64_t(1) << u;
    return adj;
}

Polynomial counts_to_poly(const std::vector<uint64_t>& counts) {
    std::vector<BigInt> c;
    c.reserve(counts.size());
    for (uint64_t k : counts) c.emplace_back(static_cast<unsigned long>(k));
    return Polynomial(std::move(c));
}

void check_bruteforce_size(const Graph& g) {
    if (g.n() > kBruteforceMaxVertices)
        throw std::invalid_argument("indpoly_bruteforce: " + std::to_string(g.n()) +
                                    " vertices exceeds the " +
                                    std::to_string(kBruteforceMaxVertices) + "-vertex guard");
}

}  // namespace

Polynomial indpoly_bruteforce_serial(const Graph& g) {
    check_bruteforce_size(g);
    const int n = g.n();
    const auto adj = adjacency_masks(g);
    std::vector<uint64_t> counts(size_t(n) + 1, 0);
    const uint64_t total = uint64_t(1) << n;
    for (uint64_t s = 0; s < total; ++s) {
        uint64_t rest = s;
        bool stable = true;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & s) {
                stable = false;
                break;
            }
        }
        if (stable) ++counts[std::popcount(s)];
    }
    return counts_to_poly(counts);
}

Polynomial indpoly_bruteforce(const Graph& g) {
    check_bruteforce_size(g);
    const int n = g.n();
    const auto adj = adjacency_masks(g);
    std::vector<uint64_t> counts(size_t(n) + 1, 0);
    const long long total = 1LL << n;
#pragma omp parallel
    {
        std::vector<uint64_t> local(size_t(n) + 1, 0);
#pragma omp for schedule(static)
        for (long long m = 0; m < total; ++m) {
            const uint64_t s = uint64_t(m);
            uint64_t rest = s;
            bool stable = true;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (adj[v] & s) {
                    stable = false;
                    break;
                }
            }
            if (stable) ++local[std::popcount(s)];
        }
#pragma omp critical
        for (size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
    }
    return counts_to_poly(counts);
}

namespace {

class BranchEngine {
public:
    BranchEngine(const Graph& g, long long node_limit) : g_(g), limit_(node_limit) {}

    Polynomial run() {
        Bitset all(g_.n());
        all.set_all();
        return eval(all);
    }

    long long nodes() const { return nodes_; }
    long long memo_hits() const { return hits_; }

private:
    Polynomial eval(const Bitset& alive) {
        ++nodes_;
        if (limit_ >= 0 && nodes_ > limit_)
            throw EngineLimitError("branch computation exceeded the work limit of " +
                                   std::to_string(limit_) + " nodes");
        const int size = alive.count();
        if (size == 0) return Polynomial::one();
        if (size == 1) return Polynomial({1, 1});

        if (auto it = memo_.find(alive); it != memo_.end()) {
            ++hits_;
            return it->second;
        }

        auto comps = connected_components_within(g_, alive);
        Polynomial result;
        if (comps.size() > 1) {
            result = Polynomial::one();
            for (const auto& comp : comps) result = mul(result, eval(comp));
        } else {
            // pivot on a maximum-degree vertex (ties: lowest index) so the
            // closed-neighborhood branch removes as much as possible
            int pivot = -1, best = -1;
            for (int v = alive.first(); v >= 0; v = alive.next(v)) {
                Bitset nb = g_.row(v);
                nb &= alive;
                const int d = nb.count();
                if (d > best) {
                    best = d;
                    pivot = v;
                }
            }
            Bitset without = alive;
            without.reset(pivot);
            Bitset far = without;
            far.and_not(g_.row(pivot));
            result = add(eval(without), shift_up(eval(far)));
        }
        memo_.emplace(alive, result);
        return result;
    }

    const Graph& g_;
    const long long limit_;
    long long nodes_ = 0;
    long long hits_ = 0;
    MemoCache memo_;
};

}  // namespace

Polynomial indpoly_branch(const Graph& g, long long node_limit, BranchStats* stats) {
    BranchEngine engine(g, node_limit);
    Polynomial p = engine.run();
    if (stats) {
        stats->nodes = engine.nodes();
        stats->memo_hits = engine.memo_hits();
    }
    return p;
}

Polynomial indpoly_expr(const ExprPtr& e, long long budget, long long node_limit) {
    using K = GraphExpr::Kind;
    switch (e->kind) {
        case K::Complete: {
            std::vector<BigInt> c{1};
            if (e->size > 0) c.emplace_back(static_cast<long>(e->size));
            return Polynomial(std::move(c));
        }
        case K::Multipartite: {
            // 1 + sum over parts of ((1+x)^part - 1), equal parts grouped
            std::map<long long, long long> by_size;
            for (long long p : e->parts) ++by_size[p];
            Polynomial acc = Polynomial::one();
            const Polynomial one_plus_x({1, 1});
            for (auto [part, copies] : by_size) {
                Polynomial term = add_scalar(power(one_plus_x, part), -1);
                acc = add(acc, scale(term, BigInt(static_cast<long>(copies))));
            }
            return acc;
        }
        case K::Union: {
            Polynomial acc = Polynomial::one();
            for (const auto& c : e->children)
                acc = mul(acc, indpoly_expr(c, budget, node_limit));
            return acc;
        }
        case K::Join: {
            // stable sets of a Zykov sum live entirely inside one summand,
            // so the empty set is the only one counted more than once
            Polynomial acc;
            for (const auto& c : e->children)
                acc = add(acc, indpoly_expr(c, budget, node_limit));
            return add_scalar(acc, -BigInt(static_cast<long>(e->children.size()) - 1));
        }
        case K::Path:
        case K::Cycle:
        case K::Explicit:
        case K::Corona:
            return indpoly_branch(expand(e, budget), node_limit);
    }
    throw std::logic_error("unreachable");
}

BigInt stable_count(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("stable_count: negative size");
    return indpoly_branch(g).coeff(k);
}

}  // namespace indpoly
