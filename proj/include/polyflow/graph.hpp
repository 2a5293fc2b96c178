#ifndef POLYFLOW_GRAPH_HPP
#define POLYFLOW_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyflow/common.hpp"

namespace polyflow {

struct Edge {
    int id;
    int tail;
    int head;
};

// Loopless multigraph on vertices 1..n whose edges all point from a smaller
// to a larger vertex. Edge ids are list positions; parallel edges are
// distinguished only by id.
class DirectedMultigraph {
public:
    DirectedMultigraph() = default;
    DirectedMultigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_.at(id); }

    // Edge ids incident to v, ascending.
    const std::vector<int>& in_edges(int v) const { return in_.at(v); }
    const std::vector<int>& out_edges(int v) const { return out_.at(v); }

    bool is_inner(int v) const { return v > 1 && v < n_; }

    // #E - #V + 1, the dimension of the flow polytope of a pruned graph.
    int flow_dimension() const { return edge_count() - n_ + 1; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> out_;
};

// Per-vertex linear orders on incoming and outgoing edges. Orders are stored
// for every vertex; only inner vertices take part in coherence.
class Framing {
public:
    Framing() = default;
    Framing(const DirectedMultigraph& g, std::vector<std::vector<int>> in_order,
            std::vector<std::vector<int>> out_order);

    // in_order and out_order sorted by edge id.
    static Framing id_order(const DirectedMultigraph& g);

    const std::vector<int>& in_order(int v) const { return in_order_.at(v); }
    const std::vector<int>& out_order(int v) const { return out_order_.at(v); }

    // Position of edge `e` in the order at its head (in) or tail (out).
    int in_rank(int e) const { return in_rank_.at(e); }
    int out_rank(int e) const { return out_rank_.at(e); }

    bool operator==(const Framing& other) const {
        return in_order_ == other.in_order_ && out_order_ == other.out_order_;
    }

private:
    std::vector<std::vector<int>> in_order_;
    std::vector<std::vector<int>> out_order_;
    std::vector<int> in_rank_;
    std::vector<int> out_rank_;
};

// A source-to-sink path, stored as its edge-id sequence.
struct Route {
    std::vector<int> edges;

    auto operator<=>(const Route&) const = default;
    bool operator==(const Route&) const = default;
};

using Clique = std::vector<Route>;

struct PrunedGraph {
    DirectedMultigraph graph;
    // original_vertex[v] is the input label of pruned vertex v (index 0 unused).
    std::vector<int> original_vertex;
    // original_edge[e] is the input id of pruned edge e.
    std::vector<int> original_edge;
    // Input labels of removed vertices, in removal order.
    std::vector<int> removed_vertices;
};

// Repeatedly removes inner vertices that have only incoming or only outgoing
// edges, then relabels the survivors 1..n'. Throws InputError when no edge
// from 1 to n survives.
PrunedGraph prune_inner_vertices(const DirectedMultigraph& g);

// All 1 -> n routes, sorted lexicographically by edge-id sequence.
std::vector<Route> enumerate_routes(const DirectedMultigraph& g);

// Vertices visited by a route, including 1 and n.
std::vector<int> route_vertices(const DirectedMultigraph& g, const Route& route);

// Edge-indicator vector of a route (length #E).
std::vector<int> route_indicator(const DirectedMultigraph& g, const Route& route);

// Orders prefixes ending at v (compare_into) and suffixes starting at v
// (compare_outof) by the edge where they last (first) diverge.
std::strong_ordering compare_into(const DirectedMultigraph& g, const Framing& f, int v,
                                  std::span<const int> p, std::span<const int> q);
std::strong_ordering compare_outof(const DirectedMultigraph& g, const Framing& f, int v,
                                   std::span<const int> p, std::span<const int> q);

bool coherent(const DirectedMultigraph& g, const Framing& f, const Route& p, const Route& q);

// Pairwise coherence of `routes`; row-major n x n, 1 = coherent.
std::vector<std::uint8_t> coherence_matrix(const DirectedMultigraph& g, const Framing& f,
                                           const std::vector<Route>& routes);
std::vector<std::uint8_t> coherence_matrix_serial(const DirectedMultigraph& g, const Framing& f,
                                                  const std::vector<Route>& routes);

// Every framing of g (product of permutations at inner vertices).
std::vector<Framing> all_framings(const DirectedMultigraph& g);

// Framing obtained by shuffling each inner vertex's orders with a seeded RNG.
Framing random_framing(const DirectedMultigraph& g, std::uint64_t seed);

} // namespace polyflow

#endif
