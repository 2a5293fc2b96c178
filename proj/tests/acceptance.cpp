#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyflow/asm.hpp"
#include "polyflow/fixtures.hpp"
#include "polyflow/kostant.hpp"
#include "polyflow/triangulations.hpp"
#include "polyflow/verify.hpp"

using namespace polyflow;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
};

Integer big(std::uint64_t v) {
    return Integer(std::to_string(v));
}

std::string first_failure(const CheckResult& r) {
    for (const auto& l : r.lines) {
        if (!l.ok) return l.fixture + ": " + l.detail;
    }
    return "";
}

void merge(Outcome& out, const std::string& name, const CheckResult& r) {
    out.detail << " " << name << " " << r.lines.size() << " checks";
    out.require(r.ok(), name + " " + first_failure(r));
}

std::vector<FramedGraph> framed_corpus() {
    std::vector<FramedGraph> out;
    for (const auto& g : graph_fixtures(7)) {
        const bool exhaustive = g.name == "K4" || g.name == "K5";
        auto v = framed_variants(g, exhaustive);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Outcome criterion1() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Integer> expected{1, 2, 10, 140};
    for (int n = 3; n <= 6; ++n) {
        const auto g = complete_graph(n + 1);
        const auto f = Framing::id_order(g);
        Integer product = 1;
        for (int i = 1; i <= n - 2; ++i) product *= big(oracle::catalan(i));
        const Integer kostant = flow_polytope_volume(g);
        const Integer ps = static_cast<unsigned long>(ps_triangulation(g, f).size());
        const Integer dkk = static_cast<unsigned long>(dkk_maximal_cliques(g, f).size());
        out.require(product == expected[n - 3], "Catalan product n=" + std::to_string(n));
        out.require(kostant == product && ps == product && dkk == product, "volume K_" + std::to_string(n + 1));
        out.detail << " K" << n + 1 << "=" << kostant << "/" << ps << "/" << dkk;
    }
    const auto k7 = complete_graph(7);
    const auto routes = enumerate_routes(k7);
    const int dim = affine_dimension(flow_polytope_vertices(k7));
    out.require(routes.size() == 32, "K_7 routes");
    out.require(dim == 15 && k7.flow_dimension() == 15, "K_7 dimension");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < 60, "runtime");
    out.detail << " K7 routes " << routes.size() << " dim " << dim << " in " << seconds << "s";
    return out;
}

Outcome criterion2() {
    Outcome out;
    const std::vector<std::size_t> vertices{5, 14, 42};
    const std::vector<Integer> volumes{2, 16, 768};
    const std::vector<int> dims{3, 6, 10};
    for (int n = 3; n <= 5; ++n) {
        const StaircaseShape empty(n, {});
        const auto verts = p_lambda_vertices(empty);
        const Poset p = staircase_star(n);
        const Integer brute = big(oracle::linear_extensions(p));
        const Integer syt = staircase_syt_count(n);
        const Integer kostant = flow_polytope_volume(poset_to_flow_graph(p).graph);
        std::vector<IntegerPoint> pts;
        for (const auto& m : verts) pts.push_back(flatten(m));
        const int dim = affine_dimension(pts);
        const std::string tag = " n=" + std::to_string(n);
        out.require(verts.size() == vertices[n - 3] && verts.size() == oracle::catalan(n), "vertices" + tag);
        out.require(syt == volumes[n - 3] && brute == syt && count_linear_extensions(p) == syt && kostant == syt, "volume" + tag);
        out.require(dim == dims[n - 3] && dim == static_cast<int>(oracle::binomial(n, 2)), "dimension" + tag);
        out.detail << tag << ": " << verts.size() << " vertices, vol " << syt << ", dim " << dim;
    }
    return out;
}

Outcome criterion3() {
    Outcome out;
    int cases = 0;
    for (int n = 3; n <= 4; ++n) {
        for (const auto& lambda : StaircaseShape::all(n)) {
            const Poset p = skew_star(lambda);
            const auto g = poset_to_flow_graph(p).graph;
            for (int t = 0; t <= 3; ++t) {
                const Integer a = asm_dilation_count(lambda, t);
                const Integer o = order_polynomial(p, t + 1);
                const Integer f = flow_ehrhart_value(g, t);
                const std::string tag = "n=" + std::to_string(n) + " " + lambda.to_string() + " t=" + std::to_string(t);
                out.require(a == o && o == f, tag);
                if (lambda.size() == 0) out.require(a == proctor_ehrhart(n, t), "Proctor " + tag);
                ++cases;
            }
        }
    }
    out.detail << " " << cases << " (n, lambda, t) cases";
    return out;
}

Outcome criterion4() {
    Outcome out;
    merge(out, "thm2", verify_thm2(planar_fixtures()));
    return out;
}

Outcome criterion5(const std::vector<FramedGraph>& corpus) {
    Outcome out;
    merge(out, "dkk-eq-ps", verify_dkk_eq_ps(corpus));
    return out;
}

Outcome criterion6(const std::vector<FramedGraph>& corpus) {
    Outcome out;
    const auto planar = planar_fixtures();
    merge(out, "bij-linext", verify_bij_linext(planar));
    merge(out, "bij-flow", verify_bij_flow(corpus));
    merge(out, "framing-change", verify_framing_change(corpus));
    return out;
}

Outcome criterion7() {
    Outcome out;
    for (int n = 3; n <= 5; ++n) {
        const StaircaseShape lambda = StaircaseShape::staircase(n, n - 1);
        const auto r = family_report(lambda, 0);
        out.require(r.vertex_count == (std::size_t{1} << (n - 1)), "2^(n-1) vertices n=" + std::to_string(n));
        out.require(r.volume_by_extensions == big(oracle::factorial(n - 1)) && r.all_consistent, "(n-1)! n=" + std::to_string(n));
    }
    const std::vector<std::pair<int, std::size_t>> fib{{4, 13}, {5, 34}};
    const std::vector<Integer> euler{16, 272};
    for (std::size_t k = 0; k < fib.size(); ++k) {
        const int n = fib[k].first;
        const auto r = family_report(StaircaseShape::staircase(n, n - 2), 0);
        const Integer e = alternating_permutations(2 * n - 3);
        out.require(r.vertex_count == fib[k].second && r.vertex_count == oracle::fibonacci(2 * n - 1),
                    "Fibonacci vertices n=" + std::to_string(n));
        out.require(e == euler[k] && r.volume_by_extensions == e && r.all_consistent, "Euler volume n=" + std::to_string(n));
    }
    out.detail << " delta_{n-1}, delta_{n-2} corollaries checked;";
    // Vertex counts of P_{delta_{n-k}}(n) against bounded-height Dyck paths.
    bool height_k = true;
    bool height_k_plus_1 = true;
    std::string first_mismatch;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= 3 && k < n; ++k) {
            const std::size_t v = p_lambda_vertices(StaircaseShape::staircase(n, n - k)).size();
            if (v != oracle::bounded_dyck_paths(n, k)) {
                if (height_k) {
                    first_mismatch = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(v) +
                                     " vertices, " + std::to_string(oracle::bounded_dyck_paths(n, k)) + " paths";
                }
                height_k = false;
            }
            height_k_plus_1 = height_k_plus_1 && v == oracle::bounded_dyck_paths(n, k + 1);
        }
    }
    out.require(height_k, "Dyck height <= k: " + first_mismatch);
    out.detail << " counts equal Dyck paths of height <= k+1: " << (height_k_plus_1 ? "yes" : "no");
    return out;
}

Outcome criterion8() {
    Outcome out;
    int cases = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lambda : StaircaseShape::all(n)) {
            std::vector<IntegerPoint> pts;
            for (const auto& m : p_lambda_vertices(lambda)) pts.push_back(flatten(m));
            out.require(affine_dimension(pts) == static_cast<int>(oracle::binomial(n, 2)) - lambda.size(),
                        "n=" + std::to_string(n) + " " + lambda.to_string());
            ++cases;
        }
    }
    std::vector<IntegerPoint> pts;
    for (const auto& m : p_lambda_vertices(StaircaseShape(5, {2, 1, 1}))) pts.push_back(flatten(m));
    const int dim = affine_dimension(pts);
    out.require(dim == 6, "n=5 (2,1,1)");
    out.detail << " " << cases << " shapes; n=5 (2,1,1) dim " << dim;
    return out;
}

Outcome criterion9(const std::vector<FramedGraph>& corpus) {
    Outcome out;
    merge(out, "geometry", verify_geometry(planar_fixtures(), corpus));
    return out;
}

Outcome criterion10() {
    Outcome out;
    merge(out, "maps-roundtrip", verify_maps_roundtrip(planar_fixtures(), {1, 2}));
    return out;
}

} // namespace

int main() {
    const auto corpus = framed_corpus();
    struct Named {
        const char* name;
        Outcome outcome;
    };
    std::vector<Named> results;
    auto run = [&](const char* name, auto&& fn) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << " exception: " << e.what();
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << name << ":" << o.detail.str() << std::endl;
        return o.ok;
    };
    bool all = true;
    all &= run("1 Catalan volumes of F_{K_{n+1}}", criterion1);
    all &= run("2 ASM-CRY vertices, volumes, dimensions", criterion2);
    all &= run("3 Ehrhart tri-oracle", criterion3);
    all &= run("4 canonical = DKK under planar framing", criterion4);
    all &= run("5 PS leaves = DKK cliques", [&] { return criterion5(corpus); });
    all &= run("6 bijections", [&] { return criterion6(corpus); });
    all &= run("7 family corollaries", criterion7);
    all &= run("8 face dimensions", criterion8);
    all &= run("9 triangulation geometry", [&] { return criterion9(corpus); });
    all &= run("10 flow/order lattice maps", criterion10);
    return all ? 0 : 1;
}
