#ifndef POLYFLOW_JSON_IO_HPP
#define POLYFLOW_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyflow/asm.hpp"
#include "polyflow/graph.hpp"
#include "polyflow/kostant.hpp"
#include "polyflow/lattice.hpp"
#include "polyflow/planar.hpp"
#include "polyflow/poset.hpp"
#include "polyflow/triangulations.hpp"

namespace polyflow {

using Json = nlohmann::ordered_json;

struct GraphDocument {
    DirectedMultigraph graph;
    // Missing vertices fall back to id order.
    std::optional<Framing> framing;
};

// {"n": int, "edges": [[tail, head], ...], "framing": {"v": {"in": [...], "out": [...]}}}
GraphDocument graph_from_json(const Json& j);
Json graph_to_json(const DirectedMultigraph& g, const Framing* framing = nullptr);
Json framing_to_json(const DirectedMultigraph& g, const Framing& f);

// {"elements": [...], "covers": [[lo, hi], ...],
//  "embedding": {"x": {"up": [...], "down": [...]}, "_bottom": {"up": [...]}, "_top": {"down": [...]}}}
// Without "_bottom"/"_top" the minimal and maximal elements are ordered by index.
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

Json planar_to_json(const PlanarGraphData& pg);

Json route_to_json(const Route& r);
Json flow_to_json(const IntegerFlow& flow);
// {"method": ..., "framing": ..., "simplices": [{"routes": [[edge ids]], "flow": {...}}]}
Json triangulation_to_json(const std::string& method, const DirectedMultigraph& g, const Framing* framing,
                           const std::vector<Clique>& cliques, const std::vector<IntegerFlow>* flows = nullptr);
Json report_to_json(const TriangulationReport& r);
Json family_report_to_json(const FamilyReport& r);

Json read_json_file(const std::string& path);

} // namespace polyflow

#endif
