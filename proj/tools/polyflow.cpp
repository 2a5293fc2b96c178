#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyflow/asm.hpp"
#include "polyflow/fixtures.hpp"
#include "polyflow/json_io.hpp"
#include "polyflow/kostant.hpp"
#include "polyflow/triangulations.hpp"
#include "polyflow/verify.hpp"

using namespace polyflow;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct LoadedGraph {
    DirectedMultigraph graph;
    Framing framing;
    // Set when --framing planar was requested.
    std::optional<PlanarGraphData> planar;
};

// Reads graph JSON, prunes it, and resolves the requested framing on the
// pruned graph (file orders are restricted to the surviving edges).
LoadedGraph load_graph(const std::string& path, const std::string& framing_mode) {
    const GraphDocument doc = graph_from_json(read_json_file(path));
    const PrunedGraph pruned = prune_inner_vertices(doc.graph);
    const DirectedMultigraph& g = pruned.graph;
    LoadedGraph out{g, Framing::id_order(g), std::nullopt};
    if (framing_mode == "planar") {
        out.planar = planar_drawing(g);
        out.framing = out.planar->framing;
    } else if (framing_mode == "file") {
        if (!doc.framing) throw InputError("--framing file needs a \"framing\" block in the graph JSON");
        std::vector<int> new_id(doc.graph.edge_count(), -1);
        for (int e = 0; e < g.edge_count(); ++e) new_id[pruned.original_edge[e]] = e;
        std::vector<std::vector<int>> in(g.vertex_count() + 1), out_orders(g.vertex_count() + 1);
        for (int v = 1; v <= g.vertex_count(); ++v) {
            const int orig = pruned.original_vertex[v];
            for (int e : doc.framing->in_order(orig)) {
                if (new_id[e] >= 0) in[v].push_back(new_id[e]);
            }
            for (int e : doc.framing->out_order(orig)) {
                if (new_id[e] >= 0) out_orders[v].push_back(new_id[e]);
            }
        }
        out.framing = Framing(g, in, out_orders);
    } else if (framing_mode != "id-order") {
        throw InputError("unknown framing '" + framing_mode + "'");
    }
    return out;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("--lambda must be a comma-separated list of integers");
        }
    }
    return parts;
}

int report(const CheckResult& r, const std::string& property) {
    for (const auto& line : r.lines) {
        std::cout << (line.ok ? "PASS " : "FAIL ") << property << " " << line.fixture << "  " << line.detail << "\n";
    }
    std::cout << (r.ok() ? "PASS " : "FAIL ") << property << " (" << r.lines.size() << " checks)\n";
    return r.ok() ? 0 : kExitViolation;
}

Integer volume_by(const LoadedGraph& lg, const std::string& method) {
    if (method == "kostant") return flow_polytope_volume(lg.graph);
    if (method == "ps") return static_cast<unsigned long>(ps_triangulation(lg.graph, lg.framing).size());
    if (method == "dkk") return static_cast<unsigned long>(dkk_maximal_cliques(lg.graph, lg.framing).size());
    throw InputError("unknown method '" + method + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flow, order and ASM polytopes: volumes, Ehrhart counts, triangulations"};
    app.require_subcommand(1);

    std::string path;
    std::string method = "kostant";
    std::string framing = "id-order";
    bool all_methods = false;
    int max_t = 5;
    int m_max = 5;
    int n = 3;
    std::string lambda_text;
    std::string emit = "json";
    bool all_framings = false;
    std::string graph_path;
    std::vector<int> ns;

    auto* graph_cmd = app.add_subcommand("graph", "flow polytope of a graph JSON file");
    graph_cmd->require_subcommand(1);
    auto* g_volume = graph_cmd->add_subcommand("volume", "normalized volume");
    g_volume->add_option("path", path, "graph JSON")->required();
    g_volume->add_option("--method", method)->check(CLI::IsMember({"kostant", "ps", "dkk"}));
    g_volume->add_option("--framing", framing)->check(CLI::IsMember({"file", "id-order", "planar"}));
    g_volume->add_flag("--all", all_methods, "compute by all three methods and compare");
    auto* g_ehrhart = graph_cmd->add_subcommand("ehrhart", "lattice points of t F_G and the Ehrhart polynomial");
    g_ehrhart->add_option("path", path, "graph JSON")->required();
    g_ehrhart->add_option("--t", max_t, "largest dilation listed")->check(CLI::NonNegativeNumber);
    auto* g_routes = graph_cmd->add_subcommand("routes", "routes (vertices of F_G)");
    g_routes->add_option("path", path, "graph JSON")->required();

    auto* poset_cmd = app.add_subcommand("poset", "order polytope of a poset JSON file");
    poset_cmd->require_subcommand(1);
    auto* p_stats = poset_cmd->add_subcommand("stats", "linear extensions, order ideals, order polynomial");
    p_stats->add_option("path", path, "poset JSON")->required();
    p_stats->add_option("--m", m_max, "largest m for Omega(P, m)")->check(CLI::NonNegativeNumber);
    auto* p_ehrhart = poset_cmd->add_subcommand("ehrhart", "lattice points of t O(P) = Omega(P, t+1)");
    p_ehrhart->add_option("path", path, "poset JSON")->required();
    p_ehrhart->add_option("--t", max_t, "largest dilation listed")->check(CLI::NonNegativeNumber);

    auto* tri_cmd = app.add_subcommand("triangulate", "triangulate F_G");
    tri_cmd->add_option("path", path, "graph JSON")->required();
    tri_cmd->add_option("--method", method)->check(CLI::IsMember({"canonical", "dkk", "ps"}));
    tri_cmd->add_option("--framing", framing)->check(CLI::IsMember({"file", "id-order", "planar"}));
    tri_cmd->add_option("--emit", emit)->check(CLI::IsMember({"json"}));

    auto* asm_cmd = app.add_subcommand("asm", "ASM-CRY family");
    asm_cmd->require_subcommand(1);
    auto* asm_report = asm_cmd->add_subcommand("report", "vertices, dimension, volume and Ehrhart values of P_lambda(n)");
    asm_report->add_option("--n", n)->required()->check(CLI::Range(1, 7));
    asm_report->add_option("--lambda", lambda_text, "parts, e.g. 2,1,1");
    asm_report->add_option("--t", max_t, "largest dilation listed")->check(CLI::Range(0, 6));

    auto* verify_cmd = app.add_subcommand("verify", "check an identity over the fixture corpus or a given graph");
    std::string property;
    verify_cmd->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"thm2", "dkk-eq-ps", "bij-linext", "bij-flow", "framing-change", "maps-roundtrip",
                               "asm-family", "geometry"}));
    verify_cmd->add_option("--graph", graph_path, "graph JSON instead of the built-in corpus");
    verify_cmd->add_flag("--all-framings", all_framings, "use every framing of the given graph");
    verify_cmd->add_option("--n", ns, "sizes for asm-family (default 3 4 5)")->check(CLI::Range(1, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (g_volume->parsed()) {
            const LoadedGraph lg = load_graph(path, framing);
            if (all_methods) {
                Json j = Json::object();
                std::vector<Integer> values;
                for (const std::string m : {"kostant", "ps", "dkk"}) {
                    values.push_back(volume_by(lg, m));
                    std::cout << m << " " << values.back() << "\n";
                    j[m] = values.back().get_str();
                }
                const bool agree = std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values[0]; });
                j["agree"] = agree;
                std::cout << j.dump() << "\n";
                return agree ? 0 : kExitViolation;
            }
            const Integer v = volume_by(lg, method);
            std::cout << v << "\n" << Json{{"method", method}, {"volume", v.get_str()}}.dump() << "\n";
        } else if (g_ehrhart->parsed()) {
            const LoadedGraph lg = load_graph(path, "id-order");
            Json values = Json::array();
            for (int t = 0; t <= max_t; ++t) {
                const Integer c = flow_ehrhart_value(lg.graph, t);
                std::cout << "t=" << t << "  " << c << "\n";
                values.push_back(c.get_str());
            }
            Json coeffs = Json::array();
            for (const auto& c : flow_ehrhart_polynomial(lg.graph)) coeffs.push_back(c.get_str());
            std::cout << Json{{"values", values}, {"polynomial", coeffs}}.dump() << "\n";
        } else if (g_routes->parsed()) {
            const LoadedGraph lg = load_graph(path, "id-order");
            Json routes = Json::array();
            for (const auto& r : enumerate_routes(lg.graph)) {
                std::cout << "[";
                for (std::size_t k = 0; k < r.edges.size(); ++k) std::cout << (k ? "," : "") << r.edges[k];
                std::cout << "]\n";
                routes.push_back(route_to_json(r));
            }
            std::cout << Json{{"count", routes.size()}, {"routes", routes}}.dump() << "\n";
        } else if (p_stats->parsed()) {
            const Poset p = poset_from_json(read_json_file(path));
            const Integer e = count_linear_extensions(p);
            const auto ideals = order_ideals(p).size();
            std::cout << "elements " << p.size() << "\nlinear extensions " << e << "\norder ideals " << ideals << "\n";
            Json omega = Json::array();
            for (int m = 0; m <= m_max; ++m) {
                const Integer v = order_polynomial(p, m);
                std::cout << "Omega(P," << m << ") " << v << "\n";
                omega.push_back(v.get_str());
            }
            std::cout << Json{{"elements", p.size()}, {"linear_extensions", e.get_str()}, {"order_ideals", ideals}, {"omega", omega}}.dump()
                      << "\n";
        } else if (p_ehrhart->parsed()) {
            const Poset p = poset_from_json(read_json_file(path));
            Json values = Json::array();
            for (int t = 0; t <= max_t; ++t) {
                const Integer v = order_polynomial(p, t + 1);
                std::cout << "t=" << t << "  " << v << "\n";
                values.push_back(v.get_str());
            }
            std::cout << Json{{"values", values}}.dump() << "\n";
        } else if (tri_cmd->parsed()) {
            if (method == "canonical" && framing != "planar") framing = "planar";
            const LoadedGraph lg = load_graph(path, framing);
            std::vector<Clique> cliques;
            std::vector<IntegerFlow> flows;
            std::vector<LatticeSimplex> simplices;
            if (method == "ps") {
                for (auto& leaf : ps_triangulation(lg.graph, lg.framing)) {
                    simplices.push_back(clique_simplex(lg.graph, leaf.routes));
                    cliques.push_back(std::move(leaf.routes));
                    flows.push_back(std::move(leaf.flow));
                }
            } else if (method == "dkk") {
                cliques = dkk_maximal_cliques(lg.graph, lg.framing);
                for (const auto& c : cliques) simplices.push_back(clique_simplex(lg.graph, c));
            } else {
                const Poset p = dual_poset(*lg.planar).poset;
                for (const auto& ext : linear_extensions(p)) {
                    Clique c = linext_to_clique(*lg.planar, ext);
                    std::sort(c.begin(), c.end());
                    cliques.push_back(std::move(c));
                }
                simplices = transported_canonical_triangulation(*lg.planar);
            }
            const auto rep = triangulation_checks(flow_polytope_vertices(lg.graph), simplices, flow_polytope_volume(lg.graph));
            Json j = triangulation_to_json(method, lg.graph, &lg.framing, cliques, method == "ps" ? &flows : nullptr);
            j["checks"] = report_to_json(rep);
            std::cout << j.dump(2) << "\n";
            return rep.ok ? 0 : kExitViolation;
        } else if (asm_report->parsed()) {
            const StaircaseShape lambda(n, parse_parts(lambda_text));
            const FamilyReport r = family_report(lambda, max_t);
            std::cout << "P_lambda(n)  n=" << r.n << " lambda=" << r.lambda << "\n"
                      << "vertices           " << r.vertex_count << "\n"
                      << "order ideals       " << r.order_ideal_count << "\n"
                      << "dimension          " << r.dimension << " (expected " << r.expected_dimension << ")\n"
                      << "volume e(P)        " << r.volume_by_extensions << "\n"
                      << "volume Kostant     " << r.volume_by_kostant << "\n"
                      << "volume DKK         " << r.volume_by_dkk << "\n"
                      << "t   ASM   order   flow\n";
            for (const auto& row : r.ehrhart) {
                std::cout << row.t << "   " << row.asm_count << "   " << row.order_count << "   " << row.flow_count << "\n";
            }
            std::cout << family_report_to_json(r).dump() << "\n";
            return r.all_consistent ? 0 : kExitViolation;
        } else if (verify_cmd->parsed()) {
            std::vector<NamedPlanar> planar;
            std::vector<FramedGraph> framed;
            if (!graph_path.empty()) {
                const GraphDocument doc = graph_from_json(read_json_file(graph_path));
                const DirectedMultigraph g = prune_inner_vertices(doc.graph).graph;
                const NamedGraph named{graph_path, g};
                framed = framed_variants(named, all_framings);
                if (property == "thm2" || property == "bij-linext" || property == "maps-roundtrip" || property == "geometry") {
                    planar.push_back({graph_path, planar_drawing(g)});
                }
            } else {
                planar = planar_fixtures();
                for (const auto& g : graph_fixtures()) {
                    const bool exhaustive = g.name == "K4" || g.name == "K5";
                    auto v = framed_variants(g, exhaustive);
                    framed.insert(framed.end(), v.begin(), v.end());
                }
            }
            if (property == "thm2") return report(verify_thm2(planar), property);
            if (property == "dkk-eq-ps") return report(verify_dkk_eq_ps(framed), property);
            if (property == "bij-linext") return report(verify_bij_linext(planar), property);
            if (property == "bij-flow") return report(verify_bij_flow(framed), property);
            if (property == "framing-change") return report(verify_framing_change(framed), property);
            if (property == "maps-roundtrip") return report(verify_maps_roundtrip(planar), property);
            if (property == "geometry") return report(verify_geometry(planar, framed), property);
            if (ns.empty()) ns = {3, 4, 5};
            CheckResult all;
            for (int k : ns) {
                auto r = verify_asm_family(k);
                all.lines.insert(all.lines.end(), r.lines.begin(), r.lines.end());
            }
            return report(all, property);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ContractError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InternalError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return 0;
}
