#include "indpoly/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "indpoly/analysis.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/expr.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph6.hpp"
#include "indpoly/json_io.hpp"

namespace indpoly {
namespace {

// Shape verdicts are always emitted; the exact root count is opt-in beyond
// this degree because Sturm sequences over huge integer coefficients get
// noticeably slow.
constexpr int kAutoRootsMaxDegree = 32;

struct CommonOpts {
    std::string format = "json";
    int jobs = 0;
    long long seed = 0;
    long long budget = kDefaultBudget;
    std::string g6_file;
    bool roots = false;
};

enum class Mode { Compute, Analyze, Certify };

struct Record {
    std::string text;
    bool graph6_input = false;
    long long index = 0;  // position in the input stream, for diagnostics
};

struct RecordOut {
    std::string line;        // one JSON text line, when produced
    bool error = false;      // soft failure: line holds an error entry
    bool hard = false;       // parse failure: stop the run
    std::string diagnostic;  // stderr message for hard failures
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::string ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        const double v = std::chrono::duration<double, std::milli>(d).count();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3f", v);
        return buf;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void apply_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

Json shape_json(const Polynomial& p, const CommonOpts& o) {
    ShapeReport s = shape(p);
    if (o.roots || p.degree() <= kAutoRootsMaxDegree) s.real_rooted = real_rooted(p);
    return shape_to_json(s);
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

// Well-cover report for an expression whose structural verdict already says
// "well covered": alpha and omega come from the expression algebra, the cheap
// per-vertex facts from the expanded graph, and the enumeration of maximal
// stable sets — the only expensive step — is skipped entirely.
Json structural_wellcover_json(const ExprPtr& e, const ExprVerdict& v, const Graph& g) {
    Json wc;
    wc["method"] = "structural";
    wc["alpha"] = dec(v.alpha);
    wc["omega"] = dec(expr_omega(e));
    wc["well_covered"] = v.well_covered;
    const bool vwc = v.well_covered && g.n() > 0 && !has_isolated_vertex(g) &&
                     static_cast<long long>(g.n()) == 2 * v.alpha;
    wc["very_well_covered"] = vwc;
    auto gi = girth(g);
    wc["girth"] = gi ? Json(dec(*gi)) : Json("acyclic");
    wc["pendant_matching"] = pendant_matching(g);
    wc["witness"] = nullptr;
    return wc;
}

// Structural facts alone, for graphs too large to materialize under the
// current budget. Fields that need the concrete graph stay null.
Json structural_only_wellcover_json(const ExprPtr& e, const ExprVerdict& v) {
    Json wc;
    wc["method"] = "structural";
    wc["alpha"] = dec(v.alpha);
    wc["omega"] = dec(expr_omega(e));
    wc["well_covered"] = v.well_covered;
    wc["very_well_covered"] = nullptr;
    wc["girth"] = nullptr;
    wc["pendant_matching"] = nullptr;
    wc["witness"] = nullptr;
    return wc;
}

Json enumerated_wellcover_json(const Graph& g) {
    Json wc;
    wc["method"] = "enumeration";
    Json body = wellcover_to_json(is_well_covered(g));
    for (auto& [k, val] : body.items()) wc[k] = val;
    return wc;
}

RecordOut process_graph6_record(Mode mode, const Record& rec, const CommonOpts& o) {
    RecordOut r;
    Graph g(0);
    try {
        g = parse_graph6(rec.text);
    } catch (const std::invalid_argument& e) {
        r.hard = true;
        r.diagnostic = "record " + std::to_string(rec.index) + ": " + e.what();
        return r;
    }

    Timer timer;
    Json j;
    j["input"] = rec.text;
    j["type"] = "graph6";
    try {
        if (g.n() > o.budget)
            throw BudgetError("graph order " + std::to_string(g.n()) + " exceeds budget " +
                              std::to_string(o.budget));
        const Polynomial p = indpoly_branch(g);
        j["polynomial"] = poly_to_json(p);
        j["shape"] = shape_json(p, o);
        if (mode == Mode::Analyze) j["well_cover"] = enumerated_wellcover_json(g);
        if (mode == Mode::Certify) {
            auto cert = certify_unimodal(g);
            j["certified"] = cert.has_value();
            j["certificate"] = cert ? certificate_to_json(*cert) : Json(nullptr);
        }
    } catch (const std::exception& e) {
        Json ej;
        ej["input"] = rec.text;
        ej["type"] = "graph6";
        ej["error"] = e.what();
        ej["timing_ms"] = timer.ms();
        r.line = ej.dump();
        r.error = true;
        return r;
    }
    j["timing_ms"] = timer.ms();
    r.line = j.dump();
    return r;
}

RecordOut process_expr_record(Mode mode, const Record& rec, const CommonOpts& o) {
    RecordOut r;
    ExprPtr e;
    try {
        e = parse_expr(rec.text);
    } catch (const ParseError& pe) {
        r.hard = true;
        r.diagnostic = "record " + std::to_string(rec.index) + ": " + pe.what();
        return r;
    }

    Timer timer;
    Json j;
    j["input"] = rec.text;
    j["type"] = "expression";
    try {
        std::optional<Polynomial> poly;
        try {
            poly = indpoly_expr(e, o.budget);
        } catch (const BudgetError&) {
            if (mode == Mode::Compute) throw;  // nothing else to report
        }

        if (poly) {
            j["polynomial"] = poly_to_json(*poly);
            j["shape"] = shape_json(*poly, o);
        } else {
            j["polynomial"] = nullptr;
            j["shape"] = nullptr;
        }

        if (mode == Mode::Analyze) {
            const ExprVerdict v = well_covered_expr(e);
            std::optional<Graph> g;
            try {
                g = expand(e, o.budget);
            } catch (const BudgetError&) {
            }
            if (g && v.decided && v.well_covered) {
                j["well_cover"] = structural_wellcover_json(e, v, *g);
            } else if (g) {
                j["well_cover"] = enumerated_wellcover_json(*g);
            } else if (v.decided) {
                j["well_cover"] = structural_only_wellcover_json(e, v);
            } else {
                throw BudgetError("expansion exceeds budget and no structural rule applies");
            }
        }
        if (mode == Mode::Certify) {
            auto cert = certify_unimodal(e, o.budget);
            j["certified"] = cert.has_value();
            j["certificate"] = cert ? certificate_to_json(*cert) : Json(nullptr);
        }
    } catch (const std::exception& ex) {
        Json ej;
        ej["input"] = rec.text;
        ej["type"] = "expression";
        ej["error"] = ex.what();
        ej["timing_ms"] = timer.ms();
        r.line = ej.dump();
        r.error = true;
        return r;
    }
    j["timing_ms"] = timer.ms();
    r.line = j.dump();
    return r;
}

RecordOut process_record(Mode mode, const Record& rec, const CommonOpts& o) {
    return rec.graph6_input ? process_graph6_record(mode, rec, o)
                            : process_expr_record(mode, rec, o);
}

// Pulls records from the expression positionals, then from the graph6 file
// (one record per line); computes chunks in parallel and emits the lines in
// input order so sweeps over large corpora stream in bounded memory.
int run_records(Mode mode, const CommonOpts& o, const std::vector<std::string>& exprs,
                std::ostream& out, std::ostream& err) {
    if (o.format != "json") {
        err << "error: --format csv is only available for scan\n";
        return 2;
    }
    apply_jobs(o.jobs);

    std::ifstream fin;
    if (!o.g6_file.empty()) {
        fin.open(o.g6_file);
        if (!fin) {
            err << "error: cannot open graph6 file '" << o.g6_file << "'\n";
            return 2;
        }
    }

    size_t expr_next = 0;
    bool file_header_checked = false;
    long long index = 0;
    auto next_record = [&](Record& rec) -> bool {
        if (expr_next < exprs.size()) {
            rec = Record{exprs[expr_next++], false, index++};
            return true;
        }
        std::string line;
        while (fin.is_open() && std::getline(fin, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!file_header_checked) {
                file_header_checked = true;
                const std::string header = ">>graph6<<";
                if (line.rfind(header, 0) == 0) line.erase(0, header.size());
            }
            if (line.empty()) continue;
            rec = Record{line, true, index++};
            return true;
        }
        return false;
    };

    constexpr size_t kChunk = 256;
    bool any_error = false;
    bool any_record = false;
    std::vector<Record> batch;
    batch.reserve(kChunk);
    for (;;) {
        batch.clear();
        Record rec;
        while (batch.size() < kChunk && next_record(rec)) batch.push_back(rec);
        if (batch.empty()) break;
        any_record = true;

        std::vector<RecordOut> results(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (batch.size() > 1)
#endif
        for (long long i = 0; i < static_cast<long long>(batch.size()); ++i)
            results[size_t(i)] = process_record(mode, batch[size_t(i)], o);

        for (const RecordOut& res : results) {
            if (res.hard) {
                out.flush();
                err << "error: " << res.diagnostic << "\n";
                return 2;
            }
            out << res.line << "\n";
            any_error = any_error || res.error;
        }
    }

    if (!any_record) {
        err << "error: no input; pass one or more expressions or --g6 FILE\n";
        return 2;
    }
    return any_error ? 1 : 0;
}

int run_scan(const CommonOpts& o, const std::string& family, long long lo, long long hi,
             std::ostream& out, std::ostream& err) {
    apply_jobs(o.jobs);
    Timer timer;
    ScanWindows w;
    try {
        if (family == "h") {
            w = scan_h_family(lo, hi);
        } else if (family == "gq_literal") {
            w = scan_gq_literal(lo, hi);
        } else {
            err << "error: unknown scan family '" << family << "' (expected: h, gq_literal)\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (o.format == "csv") {
        out << "kind,lo,hi\n";
        for (const auto& [a, b] : w.non_unimodal) out << "non_unimodal," << a << "," << b << "\n";
        for (const auto& [a, b] : w.non_log_concave)
            out << "non_log_concave," << a << "," << b << "\n";
        return 0;
    }
    Json j;
    j["family"] = family;
    j["lo"] = dec(lo);
    j["hi"] = dec(hi);
    const Json wj = windows_to_json(w);
    j["non_unimodal"] = wj["non_unimodal"];
    j["non_log_concave"] = wj["non_log_concave"];
    j["timing_ms"] = timer.ms();
    out << j.dump() << "\n";
    return 0;
}

int run_family(const CommonOpts& o, const std::string& name, const std::vector<long long>& params,
               bool connected, std::ostream& out, std::ostream& err) {
    if (o.format != "json") {
        err << "error: --format csv is only available for scan\n";
        return 2;
    }
    apply_jobs(o.jobs);
    if (params.size() != 1) {
        err << "error: family '" << name << "' takes exactly one integer parameter\n";
        return 2;
    }
    if (connected && name != "counterexample") {
        err << "error: --connected only applies to the counterexample family\n";
        return 2;
    }

    Timer timer;
    FamilyReport rep;
    try {
        if (name == "h") {
            rep = h_report(params[0]);
        } else if (name == "gq") {
            rep = gq_report(params[0], /*literal=*/false);
        } else if (name == "gq_literal") {
            rep = gq_report(params[0], /*literal=*/true);
        } else if (name == "lemma3") {
            rep = lemma3_report(params[0]);
        } else if (name == "counterexample") {
            rep = counterexample_for_alpha(params[0], connected);
        } else {
            err << "error: unknown family '" << name
                << "' (expected: h, gq, gq_literal, lemma3, counterexample)\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Json j = family_to_json(rep);
    j["timing_ms"] = timer.ms();
    out << j.dump() << "\n";
    return 0;
}

void add_common(CLI::App* sub, CommonOpts& o, bool with_inputs) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--jobs", o.jobs, "worker thread count (0 = library default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed,
                    "seed for randomized audits (reserved; current commands are deterministic)");
    sub->add_option("--budget", o.budget, "maximum vertex count for graph expansion")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    if (with_inputs) {
        sub->add_option("--g6", o.g6_file, "file of graph6 records, one per line");
        sub->add_flag("--roots", o.roots,
                      "run the exact real-rootedness test regardless of degree");
    }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact independence polynomials: computation, shape analysis, "
                 "unimodality certificates, counterexample families"};
    app.require_subcommand(1);

    CommonOpts compute_opts, analyze_opts, certify_opts, scan_opts, family_opts;
    std::vector<std::string> compute_exprs, analyze_exprs, certify_exprs;

    CLI::App* compute = app.add_subcommand("compute", "independence polynomial and shape");
    add_common(compute, compute_opts, true);
    compute->add_option("exprs", compute_exprs, "graph expressions");

    CLI::App* analyze = app.add_subcommand("analyze", "well-coveredness report");
    add_common(analyze, analyze_opts, true);
    analyze->add_option("exprs", analyze_exprs, "graph expressions");

    CLI::App* certify = app.add_subcommand("certify", "unimodality certificate search");
    add_common(certify, certify_opts, true);
    certify->add_option("exprs", certify_exprs, "graph expressions");

    CLI::App* scan = app.add_subcommand("scan", "shape windows over a parameter range");
    add_common(scan, scan_opts, false);
    std::string scan_family;
    long long scan_lo = 0, scan_hi = 0;
    scan->add_option("family", scan_family, "family to scan (h, gq_literal)")->required();
    scan->add_option("lo", scan_lo, "first parameter value")->required();
    scan->add_option("hi", scan_hi, "last parameter value")->required();

    CLI::App* family = app.add_subcommand("family", "report on one family member");
    add_common(family, family_opts, false);
    std::string family_name;
    std::vector<long long> family_params;
    bool family_connected = false;
    family->add_option("name", family_name, "h, gq, gq_literal, lemma3, counterexample")
        ->required();
    family->add_option("params", family_params, "integer parameter");
    family->add_flag("--connected", family_connected,
                     "connected variant (counterexample only)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("indpoly");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (app.got_subcommand(compute))
        return run_records(Mode::Compute, compute_opts, compute_exprs, out, err);
    if (app.got_subcommand(analyze))
        return run_records(Mode::Analyze, analyze_opts, analyze_exprs, out, err);
    if (app.got_subcommand(certify))
        return run_records(Mode::Certify, certify_opts, certify_exprs, out, err);
    if (app.got_subcommand(scan))
        return run_scan(scan_opts, scan_family, scan_lo, scan_hi, out, err);
    if (app.got_subcommand(family))
        return run_family(family_opts, family_name, family_params, family_connected, out, err);
    err << "error: no subcommand\n";  // unreachable: require_subcommand(1)
    return 2;
}

}  // namespace indpoly
