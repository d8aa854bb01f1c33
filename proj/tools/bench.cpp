// Compares the OpenMP kernels against their serial reference implementations:
// subset-enumeration polynomial counting on G(n, 1/2) instances and the
// closed-form family scan. Prints a timing table; not part of the test suite,
// but it asserts that both implementations agree before reporting.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"

using namespace indpoly;

namespace {

Graph random_graph(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution edge(0.5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

template <typename F>
double best_ms(int repeats, F&& f) {
    double best = -1.0;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (best < 0 || ms < best) best = ms;
    }
    return best;
}

void print_row(const std::string& kernel, const std::string& params, double serial_ms,
               double parallel_ms, bool agree) {
    std::printf("%-12s %-14s %12.2f %12.2f %9.2fx   %s\n", kernel.c_str(), params.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms, agree ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial-vs-OpenMP kernel benchmark"};
    std::vector<int> sizes{20, 22, 24};
    long long scan_hi = 3000;
    int repeats = 3;
    int jobs = 0;
    unsigned seed = 12345;
    app.add_option("--sizes", sizes, "brute-force graph orders")->capture_default_str();
    app.add_option("--scan-hi", scan_hi, "scan range upper end")->capture_default_str();
    app.add_option("--repeat", repeats, "repetitions, best time kept")->capture_default_str();
    app.add_option("--jobs", jobs, "worker thread count (0 = library default)");
    app.add_option("--seed", seed, "random graph seed")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
    std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial code\n\n");
#endif

    std::printf("%-12s %-14s %12s %12s %10s   %s\n", "kernel", "params", "serial_ms",
                "openmp_ms", "speedup", "agree");

    for (int n : sizes) {
        const Graph g = random_graph(n, seed);
        Polynomial ps, pp;
        const double ts = best_ms(repeats, [&] { ps = indpoly_bruteforce_serial(g); });
        const double tp = best_ms(repeats, [&] { pp = indpoly_bruteforce(g); });
        print_row("bruteforce", "n=" + std::to_string(n), ts, tp, ps == pp);
    }

    {
        ScanWindows ws, wp;
        const double ts = best_ms(repeats, [&] { ws = scan_h_family_serial(1, scan_hi); });
        const double tp = best_ms(repeats, [&] { wp = scan_h_family(1, scan_hi); });
        const bool agree =
            ws.non_unimodal == wp.non_unimodal && ws.non_log_concave == wp.non_log_concave;
        print_row("scan_h", "1.." + std::to_string(scan_hi), ts, tp, agree);
    }

    return 0;
}
