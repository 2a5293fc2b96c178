#include "polyflow/fixtures.hpp"

#include <map>

namespace polyflow {

DirectedMultigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    }
    return DirectedMultigraph(n, edges);
}

DirectedMultigraph parallel_edges(int k) {
    return DirectedMultigraph(2, std::vector<std::pair<int, int>>(k, {1, 2}));
}

DirectedMultigraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return DirectedMultigraph(n, edges);
}

DirectedMultigraph triangle_graph() {
    return DirectedMultigraph(3, {{1, 2}, {2, 3}, {1, 3}});
}

PlanarGraphData planar_drawing(const DirectedMultigraph& g) {
    return arc_diagram(g, planar_arc_orders(g));
}

namespace {

// Labels each region by the name given to the arc on top of it.
void label_by_top_arc(PlanarGraphData& pg, const std::map<int, std::string>& arc_label) {
    std::vector<std::string> labels(pg.regions.size());
    for (const auto& [edge, label] : arc_label) {
        const int region = pg.edge_sides.at(edge).below;
        if (region < 0) throw InternalError("fixture arc has no region below it");
        labels.at(region) = label;
    }
    label_regions(pg, labels);
}

} // namespace

PlanarGraphData low_point_fixture() {
    DirectedMultigraph g(4, {{1, 4}, {1, 2}, {1, 2}, {1, 2}, {2, 4}, {2, 3}, {2, 3}, {3, 4}, {3, 4}});
    PlanarGraphData pg = planar_drawing(g);
    label_by_top_arc(pg, {{0, "A"}, {1, "B"}, {2, "D"}, {4, "C"}, {5, "F"}, {7, "E"}});
    return pg;
}

PlanarGraphData linext_fixture() {
    // 0: 1->4 (D), 1: 1->3 (A), 2: 2->3 (C), 3: 3->4 (B), then the bottom path.
    DirectedMultigraph g(4, {{1, 4}, {1, 3}, {2, 3}, {3, 4}, {1, 2}, {2, 3}, {3, 4}});
    PlanarGraphData pg = planar_drawing(g);
    label_by_top_arc(pg, {{0, "D"}, {1, "A"}, {2, "C"}, {3, "B"}});
    return pg;
}

std::vector<NamedPlanar> planar_fixtures() {
    std::vector<NamedPlanar> out;
    out.push_back({"triangle", planar_drawing(triangle_graph())});
    out.push_back({"parallel2", planar_drawing(parallel_edges(2))});
    out.push_back({"parallel3", planar_drawing(parallel_edges(3))});
    out.push_back({"low-point", low_point_fixture()});
    out.push_back({"linext", linext_fixture()});
    for (int n = 2; n <= 4; ++n) {
        for (const auto& lambda : StaircaseShape::all(n)) {
            out.push_back({"skew" + std::to_string(n) + lambda.to_string(), poset_to_flow_graph(skew_star(lambda))});
        }
    }
    return out;
}

std::vector<NamedGraph> graph_fixtures(int max_complete) {
    std::vector<NamedGraph> out;
    for (int n = 4; n <= max_complete; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
    out.push_back({"path4", path_graph(4)});
    for (auto& p : planar_fixtures()) out.push_back({p.name, p.data.graph});
    return out;
}

std::vector<NamedPoset> poset_fixtures() {
    std::vector<NamedPoset> out;
    for (int k = 1; k <= 6; ++k) {
        out.push_back({"chain" + std::to_string(k), chain(k)});
        out.push_back({"antichain" + std::to_string(k), antichain(k)});
        out.push_back({"zigzag" + std::to_string(k), zigzag(k)});
    }
    for (int n = 2; n <= 4; ++n) out.push_back({"staircase" + std::to_string(n), staircase_star(n)});
    return out;
}

} // namespace polyflow
