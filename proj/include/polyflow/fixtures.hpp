#ifndef POLYFLOW_FIXTURES_HPP
#define POLYFLOW_FIXTURES_HPP

#include <string>
#include <vector>

#include "polyflow/graph.hpp"
#include "polyflow/planar.hpp"
#include "polyflow/poset.hpp"

namespace polyflow {

DirectedMultigraph complete_graph(int n);
// k parallel edges 1 -> 2.
DirectedMultigraph parallel_edges(int k);
DirectedMultigraph path_graph(int n);
// 1 -> 2 -> 3 plus 1 -> 3.
DirectedMultigraph triangle_graph();

// Arc diagram with the planar framing; throws if the drawing is not planar.
PlanarGraphData planar_drawing(const DirectedMultigraph& g);

// Four vertices; regions A..F read off the low-point picture, with
// f(A) = a+b+c, f(B) = b+c, f(C) = e+g, f(D) = c, f(E) = f, f(F) = g.
// Edge ids: 0 h, 1 a, 2 b, 3 c (1->2 top to bottom except h = 1->4),
// 4 k (2->4), 5 e, 6 g (2->3), 7 m, 8 f (3->4).
PlanarGraphData low_point_fixture();

// Four vertices, regions A, B, C, D with C < A < D and B < D.
PlanarGraphData linext_fixture();

struct NamedGraph {
    std::string name;
    DirectedMultigraph graph;
};

struct NamedPlanar {
    std::string name;
    PlanarGraphData data;
};

struct NamedPoset {
    std::string name;
    Poset poset;
};

// Triangle, parallel edges (2, 3), low-point and linext pictures, and
// G_{(delta_n \ lambda)^*} for 2 <= n <= 4 and every lambda.
std::vector<NamedPlanar> planar_fixtures();

// K_4..K_max_complete, path, plus every planar fixture's graph.
std::vector<NamedGraph> graph_fixtures(int max_complete = 7);

// Chains, antichains and zigzags with 1..6 elements and delta_n^* for n <= 4.
std::vector<NamedPoset> poset_fixtures();

} // namespace polyflow

#endif
