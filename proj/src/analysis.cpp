#include "indpoly/analysis.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <stdexcept>

namespace indpoly {

namespace {

constexpr long long kCertifyNodeLimit = 300000;
constexpr int kCertifyPolyMaxVertices = 512;
constexpr int kSturmMaxDegree = 64;

}  // namespace

int alpha(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    if (n == 1) return 1;

    auto comps = connected_components(g);
    if (comps.size() > 1) {
        int total = 0;
        for (const auto& c : comps) total += alpha(induced_subgraph(g, c));
        return total;
    }

    // connected: if the complement is disconnected, g is a join of the
    // complement's components and a stable set lives entirely in one factor
    Graph co = complement(g);
    auto factors = connected_components(co);
    if (factors.size() > 1) {
        int best = 0;
        for (const auto& f : factors) best = std::max(best, alpha(induced_subgraph(g, f)));
        return best;
    }

    // branch on a maximum-degree vertex
    int pivot = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(pivot)) pivot = v;
    int without = alpha(delete_vertex(g, pivot));
    int with = 1 + alpha(delete_closed_neighborhood(g, pivot));
    return std::max(without, with);
}

int omega(const Graph& g) { return alpha(complement(g)); }

std::optional<int> girth(const Graph& g) {
    const int n = g.n();
    int best = INT_MAX;
    std::vector<int> dist(n), parent(n), queue;
    queue.reserve(n);
    for (int s = 0; s < n && best > 3; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            // any cycle closed at depth d has length >= 2d, so deeper layers
            // cannot beat the current best
            if (2 * dist[u] >= best) break;
            const Bitset& nb = g.row(u);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

bool claw_free(const Graph& g) {
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.row(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u)) {
            Bitset ws = nb;
            ws.and_not(g.row(u));  // neighbors of v not adjacent to u
            for (int w = ws.next(u); w >= 0; w = ws.next(w)) {
                Bitset ts = ws;
                ts.and_not(g.row(w));
                ts.reset(u);
                ts.reset(w);
                if (ts.any()) return false;  // v with {u, w, any t} is a claw
            }
        }
    }
    return true;
}

void maximal_stable_sets(const Graph& g, const std::function<bool(const Bitset&)>& visit) {
    // maximal stable sets of g are the maximal cliques of its complement;
    // pivoting enumeration over the complement rows, candidates in index order
    const Graph co = complement(g);
    bool stop = false;

    std::function<void(Bitset&, Bitset, Bitset)> extend = [&](Bitset& r, Bitset p, Bitset x) {
        if (stop) return;
        if (p.none() && x.none()) {
            if (!visit(r)) stop = true;
            return;
        }
        int pivot = -1, best = -1;
        Bitset px = p;
        px |= x;
        for (int u = px.first(); u >= 0; u = px.next(u)) {
            Bitset t = p;
            t &= co.row(u);
            const int c = t.count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        Bitset cand = p;
        cand.and_not(co.row(pivot));
        for (int v = cand.first(); v >= 0 && !stop; v = cand.next(v)) {
            Bitset np = p;
            np &= co.row(v);
            Bitset nx = x;
            nx &= co.row(v);
            r.set(v);
            extend(r, std::move(np), std::move(nx));
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    };

    Bitset r(g.n()), p(g.n()), x(g.n());
    p.set_all();
    extend(r, std::move(p), std::move(x));
}

std::vector<std::vector<int>> maximal_stable_sets(const Graph& g) {
    std::vector<std::vector<int>> out;
    maximal_stable_sets(g, [&](const Bitset& s) {
        out.push_back(s.to_indices());
        return true;
    });
    return out;
}

bool pendant_matching(const Graph& g) {
    const int n = g.n();
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        const int u = g.row(v).first();
        edges.emplace(std::min(u, v), std::max(u, v));
    }
    std::vector<int> cover(n, 0);
    for (auto [a, b] : edges) {
        ++cover[a];
        ++cover[b];
    }
    for (int v = 0; v < n; ++v)
        if (cover[v] != 1) return false;
    return true;
}

WellCoverReport is_well_covered(const Graph& g) {
    WellCoverReport r;
    std::optional<std::vector<int>> first;
    int first_size = 0;
    bool wc = true;
    maximal_stable_sets(g, [&](const Bitset& s) {
        const int sz = s.count();
        if (!first) {
            first = s.to_indices();
            first_size = sz;
            return true;
        }
        if (sz != first_size) {
            wc = false;
            r.witness = std::make_pair(*first, s.to_indices());
            return false;
        }
        return true;
    });
    r.well_covered = wc;
    r.alpha = wc ? first_size : alpha(g);
    r.omega = omega(g);
    r.girth = girth(g);
    r.pendant_matching = pendant_matching(g);
    bool isolated = false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) isolated = true;
    r.very_well_covered = wc && g.n() > 0 && !isolated && g.n() == 2 * r.alpha;
    return r;
}

TheoremCheck pendant_matching_theorem_check(const Graph& g) {
    TheoremCheck t;
    t.pendant_matching = pendant_matching(g);
    std::optional<std::vector<int>> first;
    int first_size = 0;
    t.well_covered = true;
    maximal_stable_sets(g, [&](const Bitset& s) {
        const int sz = s.count();
        if (!first) {
            first = s.to_indices();
            first_size = sz;
            return true;
        }
        if (sz != first_size) {
            t.well_covered = false;
            return false;
        }
        return true;
    });

    const auto gi = girth(g);
    const bool girth_ok = !gi.has_value() || *gi >= 6;
    const bool is_c7 = g.n() == 7 && isomorphic(g, cycle(7));
    const bool is_k1 = g.n() == 1;
    t.applicable = g.n() >= 1 && is_connected(g) && girth_ok && !is_c7 && !is_k1;
    t.holds = t.applicable && t.well_covered == t.pendant_matching;
    return t;
}

ExprVerdict well_covered_expr(const ExprPtr& e) {
    using K = GraphExpr::Kind;
    ExprVerdict v;
    switch (e->kind) {
        case K::Complete:
            v.decided = true;
            v.well_covered = true;
            v.alpha = e->size >= 1 ? 1 : 0;
            return v;
        case K::Multipartite: {
            // the maximal stable sets of a complete multipartite graph are
            // exactly its parts
            v.decided = true;
            long long mx = 0, mn = e->parts.front();
            for (long long p : e->parts) {
                mx = std::max(mx, p);
                mn = std::min(mn, p);
            }
            v.well_covered = mx == mn;
            v.alpha = mx;
            return v;
        }
        case K::Corona:
            // every maximal stable set picks exactly one vertex from each
            // {original, its pendant leaf} pair
            v.decided = true;
            v.well_covered = true;
            v.alpha = vertex_count(e->children[0]);
            return v;
        case K::Union: {
            v.decided = true;
            v.well_covered = true;
            bool undecided = false;
            for (const auto& c : e->children) {
                ExprVerdict cv = well_covered_expr(c);
                if (cv.decided && !cv.well_covered) {
                    v.well_covered = false;
                    undecided = false;
                    break;
                }
                if (!cv.decided) undecided = true;
            }
            if (undecided) return {};
            v.alpha = expr_alpha(e);
            return v;
        }
        case K::Join: {
            // maximal stable sets of a join are the maximal stable sets of
            // its non-empty parts, so equal alpha across parts is required
            std::vector<long long> alphas;
            for (const auto& c : e->children) {
                if (vertex_count(c) == 0) continue;
                ExprVerdict cv = well_covered_expr(c);
                if (!cv.decided) return {};
                if (!cv.well_covered) {
                    v.decided = true;
                    v.well_covered = false;
                    v.alpha = expr_alpha(e);
                    return v;
                }
                alphas.push_back(cv.alpha);
            }
            v.decided = true;
            v.well_covered = true;
            for (long long a : alphas)
                if (a != alphas.front()) v.well_covered = false;
            v.alpha = alphas.empty() ? 0 : *std::max_element(alphas.begin(), alphas.end());
            return v;
        }
        case K::Path:
        case K::Cycle:
        case K::Explicit:
            return {};  // no structural rule; expand and decide on the graph
    }
    throw std::logic_error("unreachable");
}

long long expr_alpha(const ExprPtr& e) {
    using K = GraphExpr::Kind;
    switch (e->kind) {
        case K::Complete:
            return e->size >= 1 ? 1 : 0;
        case K::Path:
            return (e->size + 1) / 2;
        case K::Cycle:
            return e->size / 2;
        case K::Multipartite:
            return *std::max_element(e->parts.begin(), e->parts.end());
        case K::Explicit:
            return alpha(e->graph);
        case K::Corona:
            return vertex_count(e->children[0]);
        case K::Union: {
            long long total = 0;
            for (const auto& c : e->children) total += expr_alpha(c);
            return total;
        }
        case K::Join: {
            long long best = 0;
            for (const auto& c : e->children) best = std::max(best, expr_alpha(c));
            return best;
        }
    }
    throw std::logic_error("unreachable");
}

long long expr_omega(const ExprPtr& e) {
    using K = GraphExpr::Kind;
    switch (e->kind) {
        case K::Complete:
            return e->size;
        case K::Path:
            return e->size >= 2 ? 2 : 1;
        case K::Cycle:
            return e->size == 3 ? 3 : 2;
        case K::Multipartite:
            return static_cast<long long>(e->parts.size());
        case K::Explicit:
            return omega(e->graph);
        case K::Corona: {
            const long long child = vertex_count(e->children[0]);
            if (child == 0) return 0;
            return std::max(expr_omega(e->children[0]), 2LL);
        }
        case K::Union: {
            long long best = 0;
            for (const auto& c : e->children) best = std::max(best, expr_omega(c));
            return best;
        }
        case K::Join: {
            long long total = 0;
            for (const auto& c : e->children) total += expr_omega(c);
            return total;
        }
    }
    throw std::logic_error("unreachable");
}

CheckedFact lemma2_check(const Graph& g) {
    CheckedFact f;
    if (g.n() == 0) {
        f.detail = "hypothesis not met: empty graph";
        return f;
    }
    const int a = alpha(g);
    const int om = omega(g);
    if (om > a) {
        f.detail = "hypothesis not met: omega=" + std::to_string(om) + " > alpha=" +
                   std::to_string(a);
        return f;
    }
    f.hypothesis_met = true;
    const Polynomial p = indpoly_branch(g);
    f.holds = p.coeff(a) <= p.coeff(a - 1);
    f.detail = "omega=" + std::to_string(om) + " <= alpha=" + std::to_string(a) +
               "; s_" + std::to_string(a) + "=" + p.coeff(a).get_str() +
               (f.holds ? " <= " : " > ") + "s_" + std::to_string(a - 1) + "=" +
               p.coeff(a - 1).get_str();
    return f;
}

CheckedFact prop1_check(const Graph& g) {
    CheckedFact f;
    const WellCoverReport rep = is_well_covered(g);
    if (!rep.well_covered) {
        f.detail = "hypothesis not met: not well-covered";
        return f;
    }
    f.hypothesis_met = true;
    const Polynomial p = indpoly_branch(g);
    const int top = (rep.alpha + 1) / 2;
    f.holds = true;
    for (int k = 0; k < top; ++k)
        if (p.coeff(k) > p.coeff(k + 1)) f.holds = false;
    f.detail = "well-covered, alpha=" + std::to_string(rep.alpha) + "; prefix up to s_" +
               std::to_string(top) + (f.holds ? " is monotone" : " is not monotone");
    return f;
}

std::string cert_rule_name(CertRule r) {
    switch (r) {
        case CertRule::AlphaLe2Components: return "AlphaLe2Components";
        case CertRule::WCAlpha3: return "WCAlpha3";
        case CertRule::WCAlpha4Disconnected: return "WCAlpha4Disconnected";
        case CertRule::Alpha5UnionRule: return "Alpha5UnionRule";
        case CertRule::OmegaLeAlphaLe5WC: return "OmegaLeAlphaLe5WC";
        case CertRule::Alpha6ComponentRule: return "Alpha6ComponentRule";
        case CertRule::ClawFree: return "ClawFree";
        case CertRule::RealRootedNewton: return "RealRootedNewton";
        case CertRule::KeilsonGerberComposition: return "KeilsonGerberComposition";
        case CertRule::DirectComputation: return "DirectComputation";
    }
    return "?";
}

std::string cert_conclusion_name(CertConclusion c) {
    return c == CertConclusion::Unimodal ? "Unimodal" : "LogConcave";
}

namespace {

// audit the conclusion against the polynomial whenever one is available;
// by the theorems behind the rules this must never fire
void audit_certificate(const Certificate& c, const Polynomial* p) {
    if (!p) return;
    const ShapeReport rep = shape(*p);
    const bool ok = c.conclusion == CertConclusion::LogConcave
                        ? rep.log_concave && rep.unimodal
                        : rep.unimodal;
    if (!ok)
        throw std::logic_error("certificate audit failed: rule " + cert_rule_name(c.rule) +
                               " concluded " + cert_conclusion_name(c.conclusion) +
                               " but the computed polynomial disagrees");
}

std::optional<Certificate> certify_graph(const Graph& g, const std::optional<Polynomial>& known);

// tries to produce the polynomial within fixed resource guards
class LazyPoly {
public:
    LazyPoly(const Graph& g, const std::optional<Polynomial>& known) : g_(g) {
        if (known) {
            poly_ = *known;
            tried_ = true;
        }
    }

    const Polynomial* get() {
        if (!tried_) {
            tried_ = true;
            if (g_.n() <= kCertifyPolyMaxVertices) {
                try {
                    poly_ = indpoly_branch(g_, kCertifyNodeLimit);
                } catch (const EngineLimitError&) {
                }
            }
        }
        return poly_ ? &*poly_ : nullptr;
    }

private:
    const Graph& g_;
    bool tried_ = false;
    std::optional<Polynomial> poly_;
};

std::optional<Certificate> certify_graph(const Graph& g, const std::optional<Polynomial>& known) {
    const auto comps = connected_components(g);
    std::vector<Graph> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(induced_subgraph(g, c));

    std::vector<int> pa(parts.size());
    int total = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        pa[i] = alpha(parts[i]);
        total += pa[i];
    }
    const std::string fact_alpha = "alpha=" + std::to_string(total);

    std::vector<std::optional<bool>> wc_cache(parts.size());
    auto part_wc = [&](size_t i) {
        if (!wc_cache[i]) wc_cache[i] = is_well_covered(parts[i]).well_covered;
        return *wc_cache[i];
    };
    auto whole_wc = [&]() {
        for (size_t i = 0; i < parts.size(); ++i)
            if (!part_wc(i)) return false;
        return true;
    };

    LazyPoly lazy(g, known);
    auto issue = [&](CertRule rule, CertConclusion con, std::vector<std::string> facts,
                     std::vector<Certificate> kids = {}) {
        Certificate c{rule, con, std::move(facts), std::move(kids)};
        audit_certificate(c, lazy.get());
        return std::optional<Certificate>(std::move(c));
    };

    // (i): all components have alpha <= 2, so the polynomial is a product of
    // real-rooted factors
    if (std::all_of(pa.begin(), pa.end(), [](int a) { return a <= 2; }))
        return issue(CertRule::AlphaLe2Components, CertConclusion::LogConcave,
                     {fact_alpha, "every component has alpha <= 2"});

    // (ii): well-covered with alpha = 3; log-concave when omega <= alpha too
    if (total == 3 && whole_wc()) {
        const int om = omega(g);
        if (om <= 3)
            return issue(CertRule::WCAlpha3, CertConclusion::LogConcave,
                         {fact_alpha, "well_covered", "omega=" + std::to_string(om) + " <= 3"});
        return issue(CertRule::WCAlpha3, CertConclusion::Unimodal,
                     {fact_alpha, "well_covered"});
    }

    // (iii): well-covered, alpha = 4, disconnected
    if (total == 4 && parts.size() >= 2 && whole_wc())
        return issue(CertRule::WCAlpha4Disconnected, CertConclusion::Unimodal,
                     {fact_alpha, "disconnected", "well_covered"});

    // (iv): alpha = 5 and the components split into a block with alpha 2 and a
    // well-covered block with alpha 3
    if (total == 5 && parts.size() >= 2 && parts.size() <= 16) {
        const unsigned k = unsigned(parts.size());
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            int sum = 0;
            for (unsigned i = 0; i < k; ++i)
                if (mask & (1u << i)) sum += pa[i];
            if (sum != 2) continue;
            bool rest_wc = true;
            for (unsigned i = 0; i < k && rest_wc; ++i)
                if (!(mask & (1u << i)) && !part_wc(i)) rest_wc = false;
            if (rest_wc)
                return issue(CertRule::Alpha5UnionRule, CertConclusion::Unimodal,
                             {fact_alpha, "split into alpha=2 block and well-covered alpha=3 block"});
        }
    }

    // (v): omega <= alpha <= 5 and well-covered
    if (total <= 5) {
        const int om = omega(g);
        if (om <= total && whole_wc())
            return issue(CertRule::OmegaLeAlphaLe5WC, CertConclusion::Unimodal,
                         {fact_alpha, "omega=" + std::to_string(om), "well_covered"});
    }

    // (vi): alpha = 6, disconnected, every component with alpha in {3,4,5}
    // well-covered with omega <= alpha
    if (total == 6 && parts.size() >= 2) {
        bool ok = true;
        for (size_t i = 0; i < parts.size() && ok; ++i) {
            if (pa[i] < 3) continue;
            if (!part_wc(i) || omega(parts[i]) > pa[i]) ok = false;
        }
        if (ok)
            return issue(CertRule::Alpha6ComponentRule, CertConclusion::Unimodal,
                         {fact_alpha, "disconnected",
                          "components with alpha in {3,4,5} are well-covered with omega <= alpha"});
    }

    // claw-free graphs have log-concave independence polynomials
    if (claw_free(g))
        return issue(CertRule::ClawFree, CertConclusion::LogConcave, {fact_alpha, "claw_free"});

    // compose per-component certificates: log-concave factors preserve
    // log-concavity, one unimodal factor is allowed
    if (parts.size() >= 2) {
        std::vector<Certificate> kids;
        int unimodal_only = 0;
        bool ok = true;
        for (const auto& part : parts) {
            auto sub = certify_graph(part, std::nullopt);
            if (!sub) {
                ok = false;
                break;
            }
            if (sub->conclusion == CertConclusion::Unimodal) ++unimodal_only;
            kids.push_back(std::move(*sub));
        }
        if (ok && unimodal_only <= 1)
            return issue(CertRule::KeilsonGerberComposition,
                         unimodal_only == 0 ? CertConclusion::LogConcave
                                            : CertConclusion::Unimodal,
                         {fact_alpha, "product of certified component polynomials"},
                         std::move(kids));
    }

    // real-rooted polynomial with positive coefficients: log-concave
    if (const Polynomial* p = lazy.get(); p && p->degree() >= 1 && p->degree() <= kSturmMaxDegree)
        if (real_rooted(*p))
            return issue(CertRule::RealRootedNewton, CertConclusion::LogConcave,
                         {fact_alpha, "real_rooted"});

    // last resort: look at the polynomial itself
    if (const Polynomial* p = lazy.get()) {
        const ShapeReport rep = shape(*p);
        if (rep.log_concave)
            return issue(CertRule::DirectComputation, CertConclusion::LogConcave,
                         {fact_alpha, "computed polynomial is log-concave"});
        if (rep.unimodal)
            return issue(CertRule::DirectComputation, CertConclusion::Unimodal,
                         {fact_alpha, "computed polynomial is unimodal"});
    }
    return std::nullopt;
}

}  // namespace

std::optional<Certificate> certify_unimodal(const Graph& g) { return certify_graph(g, std::nullopt); }

namespace {

std::optional<Certificate> certify_expr_structural(const ExprPtr& e, long long budget,
                                                   const std::optional<Polynomial>& poly) {
    using K = GraphExpr::Kind;
    const long long a = expr_alpha(e);
    const std::string fact_alpha = "alpha=" + std::to_string(a);
    const ExprVerdict verdict = well_covered_expr(e);

    std::vector<ExprPtr> blocks;
    if (e->kind == K::Union)
        blocks = e->children;
    else
        blocks = {e};
    size_t nonempty = 0;
    for (const auto& b : blocks)
        if (vertex_count(b) > 0) ++nonempty;

    const Polynomial* p = poly ? &*poly : nullptr;
    auto issue = [&](CertRule rule, CertConclusion con, std::vector<std::string> facts,
                     std::vector<Certificate> kids = {}) {
        Certificate c{rule, con, std::move(facts), std::move(kids)};
        audit_certificate(c, p);
        return std::optional<Certificate>(std::move(c));
    };

    bool all_le2 = true;
    for (const auto& b : blocks)
        if (expr_alpha(b) > 2) all_le2 = false;
    if (all_le2)
        return issue(CertRule::AlphaLe2Components, CertConclusion::LogConcave,
                     {fact_alpha, "every union part has alpha <= 2"});

    if (a == 3 && verdict.decided && verdict.well_covered) {
        const long long om = expr_omega(e);
        if (om <= 3)
            return issue(CertRule::WCAlpha3, CertConclusion::LogConcave,
                         {fact_alpha, "well_covered", "omega=" + std::to_string(om) + " <= 3"});
        return issue(CertRule::WCAlpha3, CertConclusion::Unimodal, {fact_alpha, "well_covered"});
    }

    if (a == 4 && nonempty >= 2 && verdict.decided && verdict.well_covered)
        return issue(CertRule::WCAlpha4Disconnected, CertConclusion::Unimodal,
                     {fact_alpha, "disconnected", "well_covered"});

    if (a == 5 && e->kind == K::Union && blocks.size() <= 16) {
        std::vector<long long> ba;
        ba.reserve(blocks.size());
        for (const auto& b : blocks) ba.push_back(expr_alpha(b));
        const unsigned k = unsigned(blocks.size());
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            long long sum = 0;
            for (unsigned i = 0; i < k; ++i)
                if (mask & (1u << i)) sum += ba[i];
            if (sum != 2) continue;
            bool rest_wc = true;
            for (unsigned i = 0; i < k && rest_wc; ++i) {
                if (mask & (1u << i)) continue;
                const ExprVerdict bv = well_covered_expr(blocks[i]);
                if (!bv.decided || !bv.well_covered) rest_wc = false;
            }
            if (rest_wc)
                return issue(CertRule::Alpha5UnionRule, CertConclusion::Unimodal,
                             {fact_alpha, "split into alpha=2 block and well-covered alpha=3 block"});
        }
    }

    if (a <= 5 && verdict.decided && verdict.well_covered) {
        const long long om = expr_omega(e);
        if (om <= a)
            return issue(CertRule::OmegaLeAlphaLe5WC, CertConclusion::Unimodal,
                         {fact_alpha, "omega=" + std::to_string(om), "well_covered"});
    }

    if (a == 6 && nonempty >= 2) {
        bool ok = true;
        for (const auto& b : blocks) {
            const long long ba = expr_alpha(b);
            if (ba < 3) continue;
            const ExprVerdict bv = well_covered_expr(b);
            if (!bv.decided || !bv.well_covered || expr_omega(b) > ba) {
                ok = false;
                break;
            }
        }
        if (ok)
            return issue(CertRule::Alpha6ComponentRule, CertConclusion::Unimodal,
                         {fact_alpha, "disconnected",
                          "components with alpha in {3,4,5} are well-covered with omega <= alpha"});
    }

    if (e->kind == K::Union) {
        std::vector<Certificate> kids;
        int unimodal_only = 0;
        bool ok = true;
        for (const auto& b : blocks) {
            auto sub = certify_unimodal(b, budget);
            if (!sub) {
                ok = false;
                break;
            }
            if (sub->conclusion == CertConclusion::Unimodal) ++unimodal_only;
            kids.push_back(std::move(*sub));
        }
        if (ok && unimodal_only <= 1)
            return issue(CertRule::KeilsonGerberComposition,
                         unimodal_only == 0 ? CertConclusion::LogConcave
                                            : CertConclusion::Unimodal,
                         {fact_alpha, "product of certified part polynomials"}, std::move(kids));
    }

    if (p && p->degree() >= 1 && p->degree() <= kSturmMaxDegree && real_rooted(*p))
        return issue(CertRule::RealRootedNewton, CertConclusion::LogConcave,
                     {fact_alpha, "real_rooted"});

    if (p) {
        const ShapeReport rep = shape(*p);
        if (rep.log_concave)
            return issue(CertRule::DirectComputation, CertConclusion::LogConcave,
                         {fact_alpha, "computed polynomial is log-concave"});
        if (rep.unimodal)
            return issue(CertRule::DirectComputation, CertConclusion::Unimodal,
                         {fact_alpha, "computed polynomial is unimodal"});
    }
    return std::nullopt;
}

}  // namespace

std::optional<Certificate> certify_unimodal(const ExprPtr& e, long long budget) {
    std::optional<Polynomial> poly;
    try {
        poly = indpoly_expr(e, budget, kCertifyNodeLimit);
    } catch (const BudgetError&) {
    } catch (const EngineLimitError&) {
    }

    try {
        const Graph g = expand(e, budget);
        return certify_graph(g, poly);
    } catch (const BudgetError&) {
    }

    return certify_expr_structural(e, budget, poly);
}

}  // namespace indpoly
