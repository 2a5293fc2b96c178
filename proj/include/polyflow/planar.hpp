#ifndef POLYFLOW_PLANAR_HPP
#define POLYFLOW_PLANAR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyflow/graph.hpp"
#include "polyflow/poset.hpp"

namespace polyflow {

// Side labels for edges on the boundary of the unbounded face.
inline constexpr int kBottom = -1;
inline constexpr int kTop = -2;

struct Region {
    std::string label;
    std::vector<int> boundary_edges;
};

// Regions on either side of an edge traversed from tail to head: `below` is
// on the right, `above` on the left. Values are region indices, kBottom or kTop.
struct EdgeSides {
    int below;
    int above;
};

// A graph drawn with 1..n on a horizontal line, together with its bounded
// regions and its planar (top-to-bottom) framing.
struct PlanarGraphData {
    DirectedMultigraph graph;
    Framing framing;
    std::vector<Region> regions;
    std::vector<EdgeSides> edge_sides;
};

struct DualPoset {
    Poset poset;
    // (lower, upper) cover -> an edge separating the two regions.
    std::map<std::pair<int, int>, int> cover_edge;
};

// Reads the drawing with all arcs above the line, nested according to the
// framing's top-to-bottom in/out orders (the orders at every vertex, 1 and n
// included, are used). Throws InputError on crossing arcs or when a region
// touches the line between two vertices.
PlanarGraphData arc_diagram(const DirectedMultigraph& g, const Framing& top_to_bottom);

// Top-to-bottom orders forced by drawing every arc above the line: longer arcs
// on top, parallel arcs with smaller id on top.
Framing planar_arc_orders(const DirectedMultigraph& g);

// Optional region labels in region-index order.
void label_regions(PlanarGraphData& pg, const std::vector<std::string>& labels);

// Poset on the bounded regions: x < y when an edge has x below and y above.
DualPoset dual_poset(const PlanarGraphData& pg);

// G_P for a poset with a planar Hasse embedding. Region k is element k;
// each edge of G_P crosses the Hasse edge below -> above.
PlanarGraphData poset_to_flow_graph(const Poset& p);

// f(x) = total flow crossed on a path from the bottom to region x, for a flow
// of total value `scale`. With `verify`, every edge is checked to satisfy
// f(above) = f(below) + fl(e), f(top) = scale.
std::vector<Rational> flow_to_order_point(const PlanarGraphData& pg, const std::vector<Rational>& flow,
                                          const Rational& scale = 1, bool verify = false);

// fl(e) = f(above) - f(below), with f(bottom) = 0 and f(top) = scale.
std::vector<Rational> order_to_flow_point(const PlanarGraphData& pg, const std::vector<Rational>& f,
                                          const Rational& scale = 1);

} // namespace polyflow

#endif
