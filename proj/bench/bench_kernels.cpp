// Times the parallel counting kernels against their serial references on a
// few host sizes and prints one table row per (kernel, host). Results are
// checked for equality while timing, so a scheduling-dependent kernel shows
// up here as a hard failure rather than a silent skew.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "subdiv/constructions.hpp"
#include "subdiv/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace subdiv;
using Clock = std::chrono::steady_clock;

template <typename F> double time_ms(F &&f, int reps) {
    const auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i)
        f();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char *kernel, const char *host, double serial_ms,
         double parallel_ms, bool equal) {
    std::printf("%-22s %-18s %10.2f %10.2f %8.2fx  %s\n", kernel, host,
                serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                equal ? "ok" : "MISMATCH");
    if (!equal)
        std::exit(1);
}

void bench_host(const char *name, const BipartiteGraph &g, int reps) {
    std::vector<VertexId> all(g.num_a());
    std::iota(all.begin(), all.end(), 0u);

    const auto ws = neighbourhood_weights_serial(g);
    const auto wp = neighbourhood_weights(g);
    bool eq = ws.pair_count() == wp.pair_count();
    for (VertexId u = 0; eq && u < g.num_a(); ++u) {
        const auto rs = ws.row(u), rp = wp.row(u);
        eq = rs.size() == rp.size();
        for (std::size_t i = 0; eq && i < rs.size(); ++i)
            eq = rs[i].v == rp[i].v && rs[i].w == rp[i].w;
    }
    row("neighbourhood_weights", name,
        time_ms([&] { neighbourhood_weights_serial(g); }, reps),
        time_ms([&] { neighbourhood_weights(g); }, reps), eq);

    const auto ms = max_codegree_serial(g);
    const auto mp = max_codegree(g);
    row("max_codegree", name,
        time_ms([&] { max_codegree_serial(g); }, reps),
        time_ms([&] { max_codegree(g); }, reps), ms == mp);

    const auto ts = total_weight_in_serial(g, all);
    const auto tp = total_weight_in(g, all);
    row("total_weight_in", name,
        time_ms([&] { total_weight_in_serial(g, all); }, reps),
        time_ms([&] { total_weight_in(g, all); }, reps), ts == tp);

    const std::uint64_t thr = light_threshold(1, 3);
    const auto ls = light_edges_in_serial(g, all, thr);
    const auto lp = light_edges_in(g, all, thr);
    row("light_edges_in", name,
        time_ms([&] { light_edges_in_serial(g, all, thr); }, reps),
        time_ms([&] { light_edges_in(g, all, thr); }, reps), ls == lp);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial loop\n");
#endif
    std::printf("%-22s %-18s %10s %11s %9s\n", "kernel", "host", "serial ms",
                "parallel ms", "speedup");

    bench_host("random 1500x1500", random_bipartite(1500, 1500, 0.08, 1), 3);
    bench_host("random 4000x800", random_bipartite(4000, 800, 0.05, 2), 3);
    bench_host("gq(23)", gq_incidence(23), 3);
    return 0;
}
