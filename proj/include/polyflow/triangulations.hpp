#ifndef POLYFLOW_TRIANGULATIONS_HPP
#define POLYFLOW_TRIANGULATIONS_HPP

#include <map>
#include <utility>
#include <vector>

#include "polyflow/graph.hpp"
#include "polyflow/kostant.hpp"
#include "polyflow/lattice.hpp"
#include "polyflow/planar.hpp"
#include "polyflow/poset.hpp"

namespace polyflow {

// ---- canonical triangulation of an order polytope ----

struct CanonicalSimplex {
    LinearExtension extension;
    // Vertex k is 0 on the first k elements of the extension and 1 elsewhere.
    LatticeSimplex simplex;
};

std::vector<CanonicalSimplex> canonical_triangulation(const Poset& p);

// Vertices of O(P): indicators of the complements of order ideals.
std::vector<IntegerPoint> order_polytope_vertices(const Poset& p);

// ---- noncrossing trees and the framed Postnikov-Stanley reduction ----

// Bipartite noncrossing tree on `left` top-to-bottom left vertices and
// `right` right vertices, encoded by the composition b (sum = left - 1):
// right vertex k is joined to b_k + 1 consecutive left vertices, each
// consecutive pair of right vertices sharing one left vertex.
struct NoncrossingTree {
    int left = 1;
    int right = 1;
    std::vector<int> composition;

    // (left index, right index) pairs, top to bottom.
    std::vector<std::pair<int, int>> edges() const;
    auto operator<=>(const NoncrossingTree&) const = default;
    bool operator==(const NoncrossingTree&) const = default;
};

NoncrossingTree noncrossing_tree(int left, std::vector<int> composition);

// All trees for (left, right), compositions in colexicographic order.
std::vector<NoncrossingTree> noncrossing_trees(int left, int right);

struct ReductionStep {
    int vertex;
    NoncrossingTree tree;
    auto operator<=>(const ReductionStep&) const = default;
    bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    auto operator<=>(const ReductionTrace&) const = default;
    bool operator==(const ReductionTrace&) const = default;
};

// A framed graph part-way through the reduction. Vertices keep their
// original labels; every current edge remembers the path of original edges
// it is the sum of.
class ReductionState {
public:
    struct StateEdge {
        int tail;
        int head;
        std::vector<int> path;
    };

    static ReductionState initial(const DirectedMultigraph& g, const Framing& f);

    // Removes inner vertex i, joining its in- and out-edges along `tree`
    // (drawn with in_order(i) and out_order(i) top to bottom), and installs
    // the inheritance framing at the vertices above i.
    ReductionState reduce(int i, const NoncrossingTree& tree) const;

    int vertex_count() const { return n_; }
    const std::vector<StateEdge>& edges() const { return edges_; }
    const std::vector<int>& in_order(int v) const { return in_.at(v); }
    const std::vector<int>& out_order(int v) const { return out_.at(v); }
    const IntegerFlow& flow() const { return flow_; }
    const ReductionTrace& trace() const { return trace_; }
    // True once only vertices 1 and n carry edges.
    bool is_leaf() const;
    // Paths of the current edges, as routes of the original graph when a leaf.
    Clique routes() const;

private:
    int n_ = 0;
    std::vector<StateEdge> edges_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> out_;
    IntegerFlow flow_;
    ReductionTrace trace_;
};

struct PSLeaf {
    Clique routes;
    IntegerFlow flow;
    ReductionTrace trace;
};

// Reduces at 2, ..., n-1 over all tree choices; leaves sorted by trace. The
// default version explores subtrees as OpenMP tasks.
std::vector<PSLeaf> ps_triangulation(const DirectedMultigraph& g, const Framing& f);
std::vector<PSLeaf> ps_triangulation_serial(const DirectedMultigraph& g, const Framing& f);

// ---- DKK triangulation ----

// Maximal cliques of the coherence graph (Bron-Kerbosch with pivoting).
// Throws InternalError if a maximal clique does not have #E - #V + 2 routes.
std::vector<Clique> dkk_maximal_cliques(const DirectedMultigraph& g, const Framing& f,
                                        Execution execution = Execution::parallel);

// Simplex spanned by the unit route flows of a clique, in edge coordinates.
LatticeSimplex clique_simplex(const DirectedMultigraph& g, const Clique& clique);
std::vector<LatticeSimplex> dkk_triangulation(const DirectedMultigraph& g, const Framing& f);

// Vertices of F_G: all unit route flows.
std::vector<IntegerPoint> flow_polytope_vertices(const DirectedMultigraph& g);

// ---- bijections ----

// Upper boundaries of the unions of the bottom with the prefixes of `ext`
// (a linear extension of the region poset, in region indices).
Clique linext_to_clique(const PlanarGraphData& pg, const LinearExtension& ext);

// Replays the reduction choosing at each vertex the tree whose composition is
// the flow on its out-edges. `flow` must have netflow (0, d_2, ..., -sum d_i).
Clique flow_to_clique(const DirectedMultigraph& g, const Framing& f, const IntegerFlow& flow);
// Inverse of flow_to_clique, by lookup among the PS leaves.
IntegerFlow clique_to_flow(const DirectedMultigraph& g, const Framing& f, const Clique& clique);
IntegerFlow clique_to_flow(const std::vector<PSLeaf>& leaves, const Clique& clique);

// b_{f2} o b_{f1}^{-1}: maximal cliques under f1 to maximal cliques under f2.
std::map<Clique, Clique> framing_change_bijection(const DirectedMultigraph& g, const Framing& f1,
                                                  const Framing& f2);

struct TriangulationComparison {
    bool equal = true;
    std::vector<std::vector<IntegerPoint>> only_in_first;
    std::vector<std::vector<IntegerPoint>> only_in_second;
};

// Set comparison of simplices by canonical key.
TriangulationComparison compare_triangulations(const std::vector<LatticeSimplex>& a,
                                               const std::vector<LatticeSimplex>& b);

// Canonical triangulation of O(P_G) carried to flow coordinates by the o-f map.
std::vector<LatticeSimplex> transported_canonical_triangulation(const PlanarGraphData& pg);

} // namespace polyflow

#endif
