#include "indpoly/expr.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "indpoly/graph6.hpp"

namespace indpoly {

namespace {

ExprPtr make(GraphExpr e) { return std::make_shared<const GraphExpr>(std::move(e)); }

void check_size(long long n, long long min, const char* what) {
    if (n < min)
        throw std::invalid_argument(std::string(what) + ": size parameter must be >= " +
                                    std::to_string(min));
    if (n > (1LL << 40)) throw std::invalid_argument(std::string(what) + ": size out of range");
}

}  // namespace

ExprPtr expr_complete(long long n) {
    check_size(n, 0, "K");
    return make({GraphExpr::Kind::Complete, n, {}, {}, {}});
}

ExprPtr expr_path(long long n) {
    check_size(n, 1, "P");
    return make({GraphExpr::Kind::Path, n, {}, {}, {}});
}

ExprPtr expr_cycle(long long n) {
    check_size(n, 3, "C");
    return make({GraphExpr::Kind::Cycle, n, {}, {}, {}});
}

ExprPtr expr_multipartite(std::vector<long long> parts) {
    if (parts.empty()) throw std::invalid_argument("KM: empty part list");
    for (long long p : parts) check_size(p, 1, "KM part");
    return make({GraphExpr::Kind::Multipartite, 0, std::move(parts), {}, {}});
}

ExprPtr expr_explicit(Graph g) {
    return make({GraphExpr::Kind::Explicit, 0, {}, std::move(g), {}});
}

namespace {

ExprPtr flatten(GraphExpr::Kind kind, std::vector<ExprPtr> children) {
    std::vector<ExprPtr> flat;
    for (auto& c : children) {
        if (!c) throw std::invalid_argument("null expression child");
        if (c->kind == kind)
            flat.insert(flat.end(), c->children.begin(), c->children.end());
        else
            flat.push_back(std::move(c));
    }
    if (flat.empty()) throw std::invalid_argument("union/join needs at least one child");
    if (flat.size() == 1) return flat[0];
    return make({kind, 0, {}, {}, std::move(flat)});
}

}  // namespace

ExprPtr expr_union(std::vector<ExprPtr> children) {
    return flatten(GraphExpr::Kind::Union, std::move(children));
}

ExprPtr expr_join(std::vector<ExprPtr> children) {
    return flatten(GraphExpr::Kind::Join, std::move(children));
}

ExprPtr expr_corona(ExprPtr child) {
    if (!child) throw std::invalid_argument("corona: null child");
    return make({GraphExpr::Kind::Corona, 0, {}, {}, {std::move(child)}});
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->size != b->size || a->parts != b->parts) return false;
    if (a->kind == GraphExpr::Kind::Explicit && !(a->graph == b->graph)) return false;
    if (a->children.size() != b->children.size()) return false;
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!expr_equal(a->children[i], b->children[i])) return false;
    return true;
}

long long vertex_count(const ExprPtr& e) {
    using K = GraphExpr::Kind;
    switch (e->kind) {
        case K::Complete:
        case K::Path:
        case K::Cycle:
            return e->size;
        case K::Multipartite:
            return std::accumulate(e->parts.begin(), e->parts.end(), 0LL);
        case K::Explicit:
            return e->graph.n();
        case K::Corona:
            return 2 * vertex_count(e->children[0]);
        case K::Union:
        case K::Join: {
            long long total = 0;
            for (const auto& c : e->children) {
                total += vertex_count(c);
                if (total > (1LL << 40)) throw std::invalid_argument("expression too large");
            }
            return total;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    long long integer() {
        skip_ws();
        if (!peek_digit()) fail("expected integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) fail("integer out of range");
            ++pos_;
        }
        return v;
    }

    bool keyword(std::string_view kw) {
        skip_ws();
        if (s_.substr(pos_, kw.size()) == kw) {
            pos_ += kw.size();
            return true;
        }
        return false;
    }

    std::vector<ExprPtr> arg_list() {
        expect('(');
        std::vector<ExprPtr> args;
        args.push_back(expr());
        while (eat(',')) args.push_back(expr());
        expect(')');
        return args;
    }

    ExprPtr expr() {
        skip_ws();
        if (peek_digit()) {
            size_t at = pos_;
            long long count = integer();
            expect('*');
            if (count < 1) throw ParseError("copy count must be >= 1", at);
            ExprPtr base = expr();
            if (count == 1) return base;
            std::vector<ExprPtr> copies(size_t(count), base);
            return expr_union(std::move(copies));
        }
        if (keyword("union")) return expr_union(arg_list());
        if (keyword("join")) return expr_join(arg_list());
        if (keyword("corona")) {
            expect('(');
            ExprPtr c = expr();
            expect(')');
            return expr_corona(std::move(c));
        }
        return atom();
    }

    ExprPtr atom() {
        size_t at = pos_;
        if (keyword("KM")) {
            expect('(');
            std::vector<long long> parts;
            do {
                size_t pat = pos_;
                long long size = integer();
                long long mult = 1;
                if (eat('^')) mult = integer();
                if (size < 1) throw ParseError("part size must be >= 1", pat);
                if (mult < 1) throw ParseError("part multiplicity must be >= 1", pat);
                if (mult > 1'000'000) throw ParseError("part multiplicity out of range", pat);
                parts.insert(parts.end(), size_t(mult), size);
            } while (eat(','));
            expect(')');
            return expr_multipartite(std::move(parts));
        }
        if (keyword("K")) {
            expect('(');
            long long n = integer();
            expect(')');
            return expr_complete(n);
        }
        if (keyword("P")) {
            expect('(');
            long long n = integer();
            if (n < 1) throw ParseError("path order must be >= 1", at);
            expect(')');
            return expr_path(n);
        }
        if (keyword("C")) {
            expect('(');
            long long n = integer();
            if (n < 3) throw ParseError("cycle order must be >= 3", at);
            expect(')');
            return expr_cycle(n);
        }
        if (keyword("g6")) {
            expect('(');
            expect('"');
            size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
            if (pos_ == s_.size()) fail("unterminated string");
            std::string_view record = s_.substr(start, pos_ - start);
            ++pos_;  // closing quote
            expect(')');
            try {
                return expr_explicit(parse_graph6(record));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), start);
            }
        }
        fail("expected expression");
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

// -------------------------------------------------------------- renderer

namespace {

void render_children(const std::vector<ExprPtr>& children, std::string& out, bool allow_repeat);

void render_node(const ExprPtr& e, std::string& out) {
    using K = GraphExpr::Kind;
    switch (e->kind) {
        case K::Complete:
            out += "K(" + std::to_string(e->size) + ")";
            return;
        case K::Path:
            out += "P(" + std::to_string(e->size) + ")";
            return;
        case K::Cycle:
            out += "C(" + std::to_string(e->size) + ")";
            return;
        case K::Multipartite: {
            out += "KM(";
            size_t i = 0;
            bool first = true;
            while (i < e->parts.size()) {
                size_t j = i;
                while (j < e->parts.size() && e->parts[j] == e->parts[i]) ++j;
                if (!first) out += ",";
                first = false;
                out += std::to_string(e->parts[i]);
                if (j - i > 1) out += "^" + std::to_string(j - i);
                i = j;
            }
            out += ")";
            return;
        }
        case K::Explicit:
            out += "g6(\"" + write_graph6(e->graph) + "\")";
            return;
        case K::Union:
            out += "union(";
            render_children(e->children, out, /*allow_repeat=*/true);
            out += ")";
            return;
        case K::Join:
            out += "join(";
            // "k*child" means k disjoint copies, so the shorthand would change
            // the meaning inside a join; spell every child out instead
            render_children(e->children, out, /*allow_repeat=*/false);
            out += ")";
            return;
        case K::Corona:
            out += "corona(";
            render_node(e->children[0], out);
            out += ")";
            return;
    }
}

// run-length compress consecutive equal children as "k*child" when allowed
void render_children(const std::vector<ExprPtr>& children, std::string& out, bool allow_repeat) {
    size_t i = 0;
    bool first = true;
    while (i < children.size()) {
        size_t j = i;
        if (allow_repeat)
            while (j < children.size() && expr_equal(children[j], children[i])) ++j;
        else
            ++j;
        if (!first) out += ",";
        first = false;
        if (j - i > 1) out += std::to_string(j - i) + "*";
        render_node(children[i], out);
        i = j;
    }
}

}  // namespace

std::string render_expr(const ExprPtr& e) {
    std::string out;
    render_node(e, out);
    return out;
}

// --------------------------------------------------------------- expand

namespace {

// writes the expansion of e into r at vertex offset `base`
void expand_into(const ExprPtr& e, Graph& r, int base) {
    using K = GraphExpr::Kind;
    switch (e->kind) {
        case K::Complete: {
            int n = int(e->size);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) r.add_edge(base + u, base + v);
            return;
        }
        case K::Path:
        case K::Cycle: {
            int n = int(e->size);
            for (int v = 0; v + 1 < n; ++v) r.add_edge(base + v, base + v + 1);
            if (e->kind == K::Cycle) r.add_edge(base + n - 1, base);
            return;
        }
        case K::Multipartite: {
            int a_start = 0;
            for (size_t a = 0; a < e->parts.size(); ++a) {
                int b_start = a_start + int(e->parts[a]);
                for (size_t b = a + 1; b < e->parts.size(); ++b) {
                    for (int u = 0; u < e->parts[a]; ++u)
                        for (int v = 0; v < e->parts[b]; ++v)
                            r.add_edge(base + a_start + u, base + b_start + v);
                    b_start += int(e->parts[b]);
                }
                a_start += int(e->parts[a]);
            }
            return;
        }
        case K::Explicit:
            for (auto [u, v] : e->graph.edges()) r.add_edge(base + u, base + v);
            return;
        case K::Corona: {
            int half = int(vertex_count(e->children[0]));
            expand_into(e->children[0], r, base);
            for (int v = 0; v < half; ++v) r.add_edge(base + v, base + half + v);
            return;
        }
        case K::Union:
        case K::Join: {
            std::vector<int> offsets{0};
            for (const auto& c : e->children) {
                expand_into(c, r, base + offsets.back());
                offsets.push_back(offsets.back() + int(vertex_count(c)));
            }
            if (e->kind == K::Join)
                for (size_t a = 0; a + 1 < e->children.size(); ++a)
                    for (size_t b = a + 1; b < e->children.size(); ++b)
                        for (int u = offsets[a]; u < offsets[a + 1]; ++u)
                            for (int v = offsets[b]; v < offsets[b + 1]; ++v)
                                r.add_edge(base + u, base + v);
            return;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Graph expand(const ExprPtr& e, long long limit) {
    long long total = vertex_count(e);
    if (total > limit)
        throw BudgetError("expansion needs " + std::to_string(total) +
                          " vertices, budget is " + std::to_string(limit));
    Graph r{int(total)};
    expand_into(e, r, 0);
    return r;
}

}  // namespace indpoly
