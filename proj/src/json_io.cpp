#include "polyflow/json_io.hpp"

#include <fstream>
#include <map>

namespace polyflow {

namespace {

template <class T>
T get_field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + " is missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(std::string(what) + " has a malformed \"" + key + "\"");
    }
}

std::vector<int> int_list(const Json& j, const std::string& what) {
    try {
        return j.get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(what + " must be a list of integers");
    }
}

std::vector<int> label_list(const Poset& p, const Json& j, const std::string& what) {
    std::vector<int> out;
    std::vector<std::string> labels;
    try {
        labels = j.get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(what + " must be a list of element labels");
    }
    for (const auto& s : labels) out.push_back(p.index_of(s));
    return out;
}

} // namespace

GraphDocument graph_from_json(const Json& j) {
    const int n = get_field<int>(j, "n", "graph");
    const auto edges = get_field<std::vector<std::pair<int, int>>>(j, "edges", "graph");
    GraphDocument doc{DirectedMultigraph(n, edges), std::nullopt};
    if (j.contains("framing")) {
        const Json& fj = j.at("framing");
        if (!fj.is_object()) throw InputError("framing must be an object keyed by vertex");
        const Framing base = Framing::id_order(doc.graph);
        std::vector<std::vector<int>> in(n + 1), out(n + 1);
        for (int v = 1; v <= n; ++v) {
            in[v] = base.in_order(v);
            out[v] = base.out_order(v);
        }
        for (const auto& [key, orders] : fj.items()) {
            int v = 0;
            try {
                v = std::stoi(key);
            } catch (const std::exception&) {
                throw InputError("framing key '" + key + "' is not a vertex");
            }
            if (v < 1 || v > n) throw InputError("framing key '" + key + "' is not a vertex");
            if (orders.contains("in")) in[v] = int_list(orders.at("in"), "framing in-order");
            if (orders.contains("out")) out[v] = int_list(orders.at("out"), "framing out-order");
        }
        doc.framing = Framing(doc.graph, in, out);
    }
    return doc;
}

Json framing_to_json(const DirectedMultigraph& g, const Framing& f) {
    Json j = Json::object();
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!g.is_inner(v)) continue;
        j[std::to_string(v)] = {{"in", f.in_order(v)}, {"out", f.out_order(v)}};
    }
    return j;
}

Json graph_to_json(const DirectedMultigraph& g, const Framing* framing) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
    Json j{{"n", g.vertex_count()}, {"edges", edges}};
    if (framing) j["framing"] = framing_to_json(g, *framing);
    return j;
}

Poset poset_from_json(const Json& j) {
    const auto labels = get_field<std::vector<std::string>>(j, "elements", "poset");
    const auto cover_labels = get_field<std::vector<std::pair<std::string, std::string>>>(j, "covers", "poset");
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (!index.emplace(labels[k], static_cast<int>(k)).second) {
            throw InputError("duplicate element '" + labels[k] + "'");
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& [lo, hi] : cover_labels) {
        if (!index.count(lo) || !index.count(hi)) throw InputError("cover refers to an unknown element");
        covers.emplace_back(index.at(lo), index.at(hi));
    }
    Poset p(labels, covers);
    if (j.contains("embedding")) {
        const Json& ej = j.at("embedding");
        if (!ej.is_object()) throw InputError("embedding must be an object keyed by element");
        HasseEmbedding emb;
        emb.up.resize(p.size());
        emb.down.resize(p.size());
        for (int x = 0; x < p.size(); ++x) {
            if (!ej.contains(p.label(x))) throw InputError("embedding is missing element '" + p.label(x) + "'");
            const Json& ex = ej.at(p.label(x));
            emb.up[x] = ex.contains("up") ? label_list(p, ex.at("up"), "embedding up") : std::vector<int>{};
            emb.down[x] = ex.contains("down") ? label_list(p, ex.at("down"), "embedding down") : std::vector<int>{};
        }
        emb.minimal_order = ej.contains("_bottom") ? label_list(p, ej.at("_bottom").value("up", Json::array()), "_bottom")
                                                   : p.minimal_elements();
        emb.maximal_order = ej.contains("_top") ? label_list(p, ej.at("_top").value("down", Json::array()), "_top")
                                                : p.maximal_elements();
        p.set_embedding(std::move(emb));
    }
    return p;
}

Json poset_to_json(const Poset& p) {
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back({p.label(lo), p.label(hi)});
    Json j{{"elements", p.labels()}, {"covers", covers}};
    if (const auto& emb = p.embedding()) {
        auto names = [&](const std::vector<int>& xs) {
            Json a = Json::array();
            for (int x : xs) a.push_back(p.label(x));
            return a;
        };
        Json ej = Json::object();
        for (int x = 0; x < p.size(); ++x) ej[p.label(x)] = {{"up", names(emb->up[x])}, {"down", names(emb->down[x])}};
        ej["_bottom"] = {{"up", names(emb->minimal_order)}};
        ej["_top"] = {{"down", names(emb->maximal_order)}};
        j["embedding"] = ej;
    }
    return j;
}

Json planar_to_json(const PlanarGraphData& pg) {
    Json regions = Json::array();
    for (const Region& r : pg.regions) regions.push_back({{"label", r.label}, {"boundary_edges", r.boundary_edges}});
    auto side = [&](int s) -> Json {
        if (s == kBottom) return "bottom";
        if (s == kTop) return "top";
        return pg.regions.at(s).label;
    };
    Json sides = Json::array();
    for (const auto& s : pg.edge_sides) sides.push_back({{"below", side(s.below)}, {"above", side(s.above)}});
    return {{"graph", graph_to_json(pg.graph, &pg.framing)}, {"regions", regions}, {"edge_sides", sides}};
}

Json route_to_json(const Route& r) {
    return Json(r.edges);
}

Json flow_to_json(const IntegerFlow& flow) {
    Json j = Json::object();
    for (std::size_t e = 0; e < flow.values.size(); ++e) j[std::to_string(e)] = flow.values[e];
    return j;
}

Json triangulation_to_json(const std::string& method, const DirectedMultigraph& g, const Framing* framing,
                           const std::vector<Clique>& cliques, const std::vector<IntegerFlow>* flows) {
    Json simplices = Json::array();
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        Json routes = Json::array();
        for (const Route& r : cliques[k]) routes.push_back(route_to_json(r));
        Json s{{"routes", routes}};
        if (flows) s["flow"] = flow_to_json(flows->at(k));
        simplices.push_back(std::move(s));
    }
    return {{"method", method},
            {"framing", framing ? framing_to_json(g, *framing) : Json(nullptr)},
            {"simplices", simplices}};
}

Json report_to_json(const TriangulationReport& r) {
    return {{"ok", r.ok},
            {"dimension", r.dimension},
            {"simplex_count", r.simplex_count},
            {"volume_sum", r.volume_sum.get_str()},
            {"samples_checked", r.samples_checked},
            {"failures", r.failures}};
}

Json family_report_to_json(const FamilyReport& r) {
    Json rows = Json::array();
    for (const auto& e : r.ehrhart) {
        rows.push_back({{"t", e.t},
                        {"asm", e.asm_count.get_str()},
                        {"order", e.order_count.get_str()},
                        {"flow", e.flow_count.get_str()}});
    }
    return {{"n", r.n},
            {"lambda", r.lambda},
            {"vertices", r.vertex_count},
            {"order_ideals", r.order_ideal_count},
            {"dimension", r.dimension},
            {"expected_dimension", r.expected_dimension},
            {"volume", {{"linear_extensions", r.volume_by_extensions.get_str()},
                        {"kostant", r.volume_by_kostant.get_str()},
                        {"dkk", r.volume_by_dkk.get_str()}}},
            {"ehrhart", rows},
            {"consistent", r.all_consistent}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace polyflow
