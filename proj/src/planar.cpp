#include "polyflow/planar.hpp"

#include <algorithm>
#include <optional>
#include <queue>

namespace polyflow {

namespace {

std::string edge_name(const DirectedMultigraph& g, int id) {
    const Edge& e = g.edge(id);
    return "e" + std::to_string(id) + "=(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

} // namespace

PlanarGraphData arc_diagram(const DirectedMultigraph& g, const Framing& f) {
    const int m = g.edge_count();
    auto contains = [&](int a, int b) {
        return g.edge(a).tail <= g.edge(b).tail && g.edge(b).head <= g.edge(a).head;
    };
    auto same_span = [&](int a, int b) {
        return g.edge(a).tail == g.edge(b).tail && g.edge(a).head == g.edge(b).head;
    };
    auto crossing = [&](int a, int b) {
        return InputError("not planar in this arc order: " + edge_name(g, a) + " crosses " + edge_name(g, b));
    };
    // higher(a, b): arc a passes above arc b.
    auto higher = [&](int a, int b) {
        if (a == b || !contains(a, b)) return false;
        if (same_span(a, b)) return f.out_rank(a) < f.out_rank(b);
        return true;
    };

    for (int a = 0; a < m; ++a) {
        const Edge& ea = g.edge(a);
        for (int b = a + 1; b < m; ++b) {
            const Edge& eb = g.edge(b);
            const bool interleave = (ea.tail < eb.tail && eb.tail < ea.head && ea.head < eb.head) ||
                                    (eb.tail < ea.tail && ea.tail < eb.head && eb.head < ea.head);
            if (interleave) throw crossing(a, b);
            if (same_span(a, b)) {
                if ((f.out_rank(a) < f.out_rank(b)) != (f.in_rank(a) < f.in_rank(b))) throw crossing(a, b);
                continue;
            }
            for (auto [outer, inner] : {std::pair{a, b}, std::pair{b, a}}) {
                if (!contains(outer, inner)) continue;
                const Edge& eo = g.edge(outer);
                const Edge& ei = g.edge(inner);
                if (eo.tail == ei.tail && f.out_rank(outer) > f.out_rank(inner)) throw crossing(a, b);
                if (eo.head == ei.head && f.in_rank(outer) > f.in_rank(inner)) throw crossing(a, b);
            }
        }
    }

    // parent[e]: the lowest arc passing above e, or -1.
    std::vector<int> parent(m, -1);
    std::vector<std::vector<int>> children(m);
    for (int e = 0; e < m; ++e) {
        for (int a = 0; a < m; ++a) {
            if (higher(a, e) && (parent[e] < 0 || higher(parent[e], a))) parent[e] = a;
        }
        if (parent[e] >= 0) children[parent[e]].push_back(e);
    }

    PlanarGraphData pg;
    pg.graph = g;
    pg.framing = f;
    std::vector<int> region_of(m, -1);
    for (int e = 0; e < m; ++e) {
        const Edge& edge = g.edge(e);
        if (children[e].empty()) {
            if (edge.head - edge.tail != 1) {
                throw InputError("region under " + edge_name(g, e) + " touches the line; prune the graph first");
            }
            continue;
        }
        auto kids = children[e];
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return g.edge(a).tail < g.edge(b).tail; });
        int reach = edge.tail;
        for (int k : kids) {
            if (g.edge(k).tail != reach) break;
            reach = g.edge(k).head;
        }
        if (reach != edge.head) {
            throw InputError("region under " + edge_name(g, e) + " touches the line; prune the graph first");
        }
        region_of[e] = static_cast<int>(pg.regions.size());
        std::vector<int> boundary = children[e];
        boundary.push_back(e);
        std::sort(boundary.begin(), boundary.end());
        pg.regions.push_back(Region{"R" + std::to_string(e), std::move(boundary)});
    }
    if (static_cast<int>(pg.regions.size()) != g.edge_count() - g.vertex_count() + 1) {
        throw InputError("arc diagram does not connect 1 to n through every gap");
    }
    for (int e = 0; e < m; ++e) {
        const int below = region_of[e] >= 0 ? region_of[e] : kBottom;
        const int above = parent[e] >= 0 ? region_of[parent[e]] : kTop;
        pg.edge_sides.push_back({below, above});
    }
    return pg;
}

Framing planar_arc_orders(const DirectedMultigraph& g) {
    std::vector<std::vector<int>> in(g.vertex_count() + 1), out(g.vertex_count() + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        out[v] = g.out_edges(v);
        std::stable_sort(out[v].begin(), out[v].end(),
                         [&](int a, int b) { return g.edge(a).head > g.edge(b).head; });
        in[v] = g.in_edges(v);
        std::stable_sort(in[v].begin(), in[v].end(),
                         [&](int a, int b) { return g.edge(a).tail < g.edge(b).tail; });
    }
    return Framing(g, std::move(in), std::move(out));
}

void label_regions(PlanarGraphData& pg, const std::vector<std::string>& labels) {
    if (labels.size() != pg.regions.size()) throw InputError("one label per region expected");
    for (std::size_t k = 0; k < labels.size(); ++k) pg.regions[k].label = labels[k];
}

DualPoset dual_poset(const PlanarGraphData& pg) {
    std::vector<std::string> labels;
    for (const Region& r : pg.regions) labels.push_back(r.label);
    std::vector<std::pair<int, int>> relations;
    for (const EdgeSides& s : pg.edge_sides) {
        if (s.below >= 0 && s.above >= 0) relations.emplace_back(s.below, s.above);
    }
    DualPoset dp{Poset::from_relations(std::move(labels), relations), {}};
    for (const auto& cover : dp.poset.covers()) {
        for (std::size_t e = 0; e < pg.edge_sides.size(); ++e) {
            if (pg.edge_sides[e].below == cover.first && pg.edge_sides[e].above == cover.second) {
                dp.cover_edge.emplace(cover, static_cast<int>(e));
                break;
            }
        }
    }
    return dp;
}

PlanarGraphData poset_to_flow_graph(const Poset& p) {
    if (!p.embedding()) throw InputError("poset has no planar Hasse embedding");
    const HasseEmbedding& emb = *p.embedding();
    const int m = p.size();
    const int zero = m;
    const int one = m + 1;

    // Undirected edges of the augmented diagram, stored lower -> upper.
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_index;
    auto add = [&](int lo, int hi) {
        edge_index[{lo, hi}] = static_cast<int>(edges.size());
        edges.emplace_back(lo, hi);
    };
    for (const auto& [lo, hi] : p.covers()) add(lo, hi);
    if (m == 0) add(zero, one);
    for (int x : emb.minimal_order) add(zero, x);
    for (int x : emb.maximal_order) add(x, one);
    const int hasse_count = static_cast<int>(edges.size());
    const int left = hasse_count;
    const int right = hasse_count + 1;
    edges.emplace_back(zero, one);
    edges.emplace_back(zero, one);

    // Dart 2e runs up edge e, dart 2e+1 runs down.
    auto up = [](int e) { return 2 * e; };
    auto down = [](int e) { return 2 * e + 1; };
    auto origin = [&](int d) { return d % 2 == 0 ? edges[d / 2].first : edges[d / 2].second; };
    auto target = [&](int d) { return d % 2 == 0 ? edges[d / 2].second : edges[d / 2].first; };

    // Counterclockwise rotation of darts leaving each vertex.
    std::vector<std::vector<int>> rotation(m + 2);
    for (int x = 0; x < m; ++x) {
        std::vector<int> ups = emb.up[x];
        std::vector<int> downs = emb.down[x];
        if (ups.empty()) ups.push_back(one);
        if (downs.empty()) downs.push_back(zero);
        for (auto it = ups.rbegin(); it != ups.rend(); ++it) rotation[x].push_back(up(edge_index.at({x, *it})));
        for (int y : downs) rotation[x].push_back(down(edge_index.at({y, x})));
    }
    rotation[zero].push_back(up(right));
    if (m == 0) rotation[zero].push_back(up(0));
    for (auto it = emb.minimal_order.rbegin(); it != emb.minimal_order.rend(); ++it) {
        rotation[zero].push_back(up(edge_index.at({zero, *it})));
    }
    rotation[zero].push_back(up(left));
    rotation[one].push_back(down(left));
    if (m == 0) rotation[one].push_back(down(0));
    for (int x : emb.maximal_order) rotation[one].push_back(down(edge_index.at({x, one})));
    rotation[one].push_back(down(right));

    const int dart_count = 2 * static_cast<int>(edges.size());
    std::vector<int> position(dart_count, -1);
    for (int v = 0; v < m + 2; ++v) {
        for (std::size_t k = 0; k < rotation[v].size(); ++k) {
            const int d = rotation[v][k];
            if (origin(d) != v) throw InternalError("rotation lists a dart at the wrong vertex");
            position[d] = static_cast<int>(k);
        }
    }
    // Face on the left: leave the head along the clockwise neighbour of the reverse dart.
    auto next_dart = [&](int d) {
        const int v = target(d);
        const auto& rot = rotation[v];
        const int k = position[d ^ 1];
        return rot[(k + static_cast<int>(rot.size()) - 1) % rot.size()];
    };

    std::vector<int> face_of(dart_count, -1);
    std::vector<std::vector<int>> face_darts;
    for (int start = 0; start < dart_count; ++start) {
        if (face_of[start] >= 0) continue;
        const int face = static_cast<int>(face_darts.size());
        face_darts.emplace_back();
        int d = start;
        do {
            if (face_of[d] >= 0) throw InputError("Hasse embedding is inconsistent: face tracing does not close");
            face_of[d] = face;
            face_darts[face].push_back(d);
            d = next_dart(d);
        } while (d != start);
    }
    const int face_count = static_cast<int>(face_darts.size());
    const int expected_faces = static_cast<int>(edges.size()) - (m + 2) + 2;
    if (face_count != expected_faces) {
        throw InputError("Hasse embedding is not planar (" + std::to_string(face_count) + " faces, expected " +
                         std::to_string(expected_faces) + ")");
    }
    const int outer = face_of[up(left)];
    if (face_of[down(right)] != outer) throw InputError("Hasse embedding is not planar: outer face is split");

    std::vector<std::vector<int>> succ(face_count);
    std::vector<int> indegree(face_count, 0);
    for (int e = 0; e < hasse_count; ++e) {
        const int west = face_of[up(e)];
        const int east = face_of[down(e)];
        if (west == outer || east == outer || west == east) {
            throw InputError("Hasse embedding is not upward planar around a cover edge");
        }
        succ[west].push_back(east);
        ++indegree[east];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int face = 0; face < face_count; ++face) {
        if (face != outer && indegree[face] == 0) ready.push(face);
    }
    std::vector<int> topo;
    while (!ready.empty()) {
        const int face = ready.top();
        ready.pop();
        topo.push_back(face);
        for (int next : succ[face]) {
            if (--indegree[next] == 0) ready.push(next);
        }
    }
    const int source = face_of[down(left)];
    const int sink = face_of[up(right)];
    if (static_cast<int>(topo.size()) != face_count - 1 || topo.front() != source || topo.back() != sink) {
        throw InputError("Hasse embedding is not upward planar");
    }
    std::vector<int> vertex_of(face_count, 0);
    for (std::size_t k = 0; k < topo.size(); ++k) vertex_of[topo[k]] = static_cast<int>(k) + 1;

    // Boundary of each face, counterclockwise from its lowest point: an upward
    // run (east side, bottom to top) then a downward run (west side, top to bottom).
    const int vertex_count = face_count - 1;
    std::vector<std::vector<int>> east_edges(vertex_count + 1), west_edges(vertex_count + 1);
    for (int face : topo) {
        const auto& cycle = face_darts[face];
        const int len = static_cast<int>(cycle.size());
        int start = -1;
        for (int k = 0; k < len; ++k) {
            const int prev = cycle[(k + len - 1) % len];
            if (prev % 2 == 1 && cycle[k] % 2 == 0) {
                if (start >= 0) throw InputError("Hasse embedding is not upward planar: face with two minima");
                start = k;
            }
        }
        if (start < 0) throw InputError("Hasse embedding is not upward planar");
        const int v = vertex_of[face];
        for (int k = 0; k < len; ++k) {
            const int d = cycle[(start + k) % len];
            const int e = d / 2;
            if (e >= hasse_count) continue;
            if (d % 2 == 0) east_edges[v].push_back(e);
            else west_edges[v].push_back(e);
        }
        std::reverse(east_edges[v].begin(), east_edges[v].end());
    }

    // Number G_P edges by tail, then top to bottom.
    std::vector<int> gp_id(hasse_count, -1);
    std::vector<std::pair<int, int>> gp_edges;
    PlanarGraphData pg;
    for (int v = 1; v <= vertex_count; ++v) {
        for (int e : east_edges[v]) {
            gp_id[e] = static_cast<int>(gp_edges.size());
            gp_edges.emplace_back(v, vertex_of[face_of[down(e)]]);
            const auto [lo, hi] = edges[e];
            pg.edge_sides.push_back({lo == zero ? kBottom : lo, hi == one ? kTop : hi});
        }
    }
    pg.graph = DirectedMultigraph(vertex_count, gp_edges);
    std::vector<std::vector<int>> in(vertex_count + 1), out(vertex_count + 1);
    for (int v = 1; v <= vertex_count; ++v) {
        for (int e : east_edges[v]) out[v].push_back(gp_id[e]);
        for (int e : west_edges[v]) in[v].push_back(gp_id[e]);
    }
    pg.framing = Framing(pg.graph, std::move(in), std::move(out));
    for (int x = 0; x < m; ++x) pg.regions.push_back(Region{p.label(x), {}});
    for (int id = 0; id < pg.graph.edge_count(); ++id) {
        const EdgeSides& s = pg.edge_sides[id];
        if (s.below >= 0) pg.regions[s.below].boundary_edges.push_back(id);
        if (s.above >= 0) pg.regions[s.above].boundary_edges.push_back(id);
    }
    return pg;
}

namespace {

void check_flow(const DirectedMultigraph& g, const std::vector<Rational>& flow, const Rational& scale) {
    if (static_cast<int>(flow.size()) != g.edge_count()) throw InputError("flow has the wrong number of entries");
    std::vector<Rational> net(g.vertex_count() + 1, 0);
    for (const Edge& e : g.edges()) {
        if (flow[e.id] < 0) throw InputError("flow is negative on edge " + std::to_string(e.id));
        net[e.tail] += flow[e.id];
        net[e.head] -= flow[e.id];
    }
    for (int v = 1; v <= g.vertex_count(); ++v) {
        Rational expected = 0;
        if (v == 1) expected = scale;
        if (v == g.vertex_count()) expected = -scale;
        if (g.vertex_count() == 1) expected = 0;
        if (net[v] != expected) throw InputError("flow violates conservation at vertex " + std::to_string(v));
    }
}

Rational side_value(int side, const std::vector<Rational>& f, const Rational& scale) {
    if (side == kBottom) return 0;
    if (side == kTop) return scale;
    return f[side];
}

} // namespace

std::vector<Rational> flow_to_order_point(const PlanarGraphData& pg, const std::vector<Rational>& flow,
                                          const Rational& scale, bool verify) {
    check_flow(pg.graph, flow, scale);
    const std::size_t count = pg.regions.size();
    std::vector<std::optional<Rational>> value(count);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < pg.edge_sides.size(); ++e) {
            const auto [below, above] = pg.edge_sides[e];
            if (above < 0 || value[above]) continue;
            if (below == kBottom) value[above] = flow[e];
            else if (below >= 0 && value[below]) value[above] = *value[below] + flow[e];
            else continue;
            changed = true;
        }
    }
    std::vector<Rational> f;
    for (const auto& v : value) {
        if (!v) throw InternalError("region not reachable from the bottom");
        f.push_back(*v);
    }
    if (verify) {
        for (std::size_t e = 0; e < pg.edge_sides.size(); ++e) {
            const auto [below, above] = pg.edge_sides[e];
            if (side_value(above, f, scale) != side_value(below, f, scale) + flow[e]) {
                throw InternalError("crossing sums depend on the path at edge " + std::to_string(e));
            }
        }
    }
    return f;
}

std::vector<Rational> order_to_flow_point(const PlanarGraphData& pg, const std::vector<Rational>& f,
                                          const Rational& scale) {
    if (f.size() != pg.regions.size()) throw InputError("order point has the wrong number of entries");
    std::vector<Rational> flow;
    for (std::size_t e = 0; e < pg.edge_sides.size(); ++e) {
        const auto [below, above] = pg.edge_sides[e];
        flow.push_back(side_value(above, f, scale) - side_value(below, f, scale));
        if (flow.back() < 0) {
            throw InputError("order point is not order preserving within [0, " + scale.get_str() + "]");
        }
    }
    try {
        check_flow(pg.graph, flow, scale);
    } catch (const InputError& err) {
        throw InternalError(std::string("o-f map produced an invalid flow: ") + err.what());
    }
    return flow;
}

} // namespace polyflow
