#ifndef POLYFLOW_VERIFY_HPP
#define POLYFLOW_VERIFY_HPP

#include <string>
#include <vector>

#include "polyflow/fixtures.hpp"
#include "polyflow/graph.hpp"
#include "polyflow/planar.hpp"

namespace polyflow {

struct CheckLine {
    std::string fixture;
    bool ok = true;
    // Counts on success, a counterexample on failure.
    std::string detail;
};

struct CheckResult {
    std::vector<CheckLine> lines;
    bool ok() const;
};

struct FramedGraph {
    std::string name;
    DirectedMultigraph graph;
    Framing framing;
};

// Framings used for the coincidence checks: every framing of the graph when
// `exhaustive`, otherwise id order plus `random_count` seeded random framings.
std::vector<FramedGraph> framed_variants(const NamedGraph& g, bool exhaustive, int random_count = 5);

// Canonical triangulation of O(P_G), carried to flow coordinates, equals the
// DKK triangulation under the planar framing.
CheckResult verify_thm2(const std::vector<NamedPlanar>& fixtures);

// PS leaves and DKK maximal cliques coincide, every leaf is pairwise coherent,
// and both counts equal the Kostant volume.
CheckResult verify_dkk_eq_ps(const std::vector<FramedGraph>& graphs);

// Linear extensions of P_G map injectively onto the maximal cliques.
CheckResult verify_bij_linext(const std::vector<NamedPlanar>& fixtures);

// flow_to_clique and clique_to_flow are mutually inverse between the integer
// flows with shifted netflow and the maximal cliques.
CheckResult verify_bij_flow(const std::vector<FramedGraph>& graphs);

// b_{f2} o b_{f1}^{-1} is a bijection between the maximal cliques of
// consecutive framings in the list (per graph name).
CheckResult verify_framing_change(const std::vector<FramedGraph>& graphs);

// For t in `dilations`, the f-o and o-f maps are mutually inverse between
// integer points of t F_G and order-preserving maps P_G -> {0..t}; also on
// the vertex sets (t = 1 with fractional checks on the identity).
CheckResult verify_maps_roundtrip(const std::vector<NamedPlanar>& fixtures, const std::vector<int>& dilations = {1, 2});

// family_report is consistent for every lambda inside delta_n.
CheckResult verify_asm_family(int n);

// Every simplex of the canonical, DKK and PS triangulations is unimodular,
// the volumes add up to the independent volume, and the seeded samples each
// fall in exactly one simplex.
CheckResult verify_geometry(const std::vector<NamedPlanar>& planar, const std::vector<FramedGraph>& graphs);

} // namespace polyflow

#endif
