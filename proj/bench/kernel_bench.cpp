#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "polyflow/fixtures.hpp"
#include "polyflow/kostant.hpp"
#include "polyflow/triangulations.hpp"

using namespace polyflow;

namespace {

double median_ms(const std::function<void()>& body, int reps) {
    std::vector<double> times;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

void row(const std::string& kernel, const std::string& input, const std::function<void()>& serial,
         const std::function<void()>& parallel, int reps) {
    const double s = median_ms(serial, reps);
    const double p = median_ms(parallel, reps);
    std::printf("%-22s %-12s %10.3f %10.3f %8.2fx\n", kernel.c_str(), input.c_str(), s, p, s / p);
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::stoi(argv[1]) : 5;
    std::printf("threads %d, median of %d runs (ms)\n", omp_get_max_threads(), reps);
    std::printf("%-22s %-12s %10s %10s %9s\n", "kernel", "input", "serial", "parallel", "speedup");

    struct Input {
        std::string name;
        DirectedMultigraph graph;
        Framing framing;
    };
    const auto k7 = complete_graph(7);
    const auto d5 = poset_to_flow_graph(staircase_star(5));
    const std::vector<Input> inputs{{"K7", k7, Framing::id_order(k7)}, {"G_delta5*", d5.graph, d5.framing}};

    for (const auto& in : inputs) {
        const auto& g = in.graph;
        const auto& f = in.framing;
        row("ps_triangulation", in.name, [&] { ps_triangulation_serial(g, f); }, [&] { ps_triangulation(g, f); }, reps);

        const auto routes = enumerate_routes(g);
        row("coherence_matrix", in.name, [&] { coherence_matrix_serial(g, f, routes); },
            [&] { coherence_matrix(g, f, routes); }, reps);

        const auto shift = NetflowVector::volume_shift(g);
        row("count_integer_flows", in.name, [&] { count_integer_flows_serial(g, shift); },
            [&] { count_integer_flows(g, shift); }, reps);

        const auto vertices = flow_polytope_vertices(g);
        const auto simplices = dkk_triangulation(g, f);
        const Integer volume = flow_polytope_volume(g);
        row("triangulation_checks", in.name,
            [&] { triangulation_checks(vertices, simplices, volume, 200, kSampleSeed, Execution::serial); },
            [&] { triangulation_checks(vertices, simplices, volume, 200, kSampleSeed, Execution::parallel); }, reps);
    }
    return 0;
}
