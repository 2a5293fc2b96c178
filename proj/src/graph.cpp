#include "polyflow/graph.hpp"

#include <algorithm>
#include <random>

namespace polyflow {

DirectedMultigraph::DirectedMultigraph(int vertex_count,
                                       const std::vector<std::pair<int, int>>& edges)
    : n_(vertex_count), in_(vertex_count + 1), out_(vertex_count + 1) {
    if (vertex_count < 1) throw InputError("graph needs at least one vertex");
    edges_.reserve(edges.size());
    for (const auto& [tail, head] : edges) {
        const int id = static_cast<int>(edges_.size());
        if (tail < 1 || head > vertex_count || tail >= head) {
            throw InputError("edge " + std::to_string(id) + " = (" + std::to_string(tail) + "," +
                             std::to_string(head) + ") must satisfy 1 <= tail < head <= n");
        }
        edges_.push_back({id, tail, head});
        out_[tail].push_back(id);
        in_[head].push_back(id);
    }
}

Framing::Framing(const DirectedMultigraph& g, std::vector<std::vector<int>> in_order,
                 std::vector<std::vector<int>> out_order)
    : in_order_(std::move(in_order)), out_order_(std::move(out_order)),
      in_rank_(g.edge_count(), -1), out_rank_(g.edge_count(), -1) {
    const int n = g.vertex_count();
    if (static_cast<int>(in_order_.size()) != n + 1 ||
        static_cast<int>(out_order_.size()) != n + 1) {
        throw InputError("framing must provide orders for vertices 1..n");
    }
    auto check = [&](const std::vector<int>& order, const std::vector<int>& expected, int v,
                     const char* kind) {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != expected) {
            throw InputError(std::string("framing ") + kind + "-order at vertex " +
                             std::to_string(v) + " is not a permutation of its " + kind +
                             "-edges");
        }
    };
    for (int v = 1; v <= n; ++v) {
        check(in_order_[v], g.in_edges(v), v, "in");
        check(out_order_[v], g.out_edges(v), v, "out");
        for (std::size_t k = 0; k < in_order_[v].size(); ++k) in_rank_[in_order_[v][k]] = static_cast<int>(k);
        for (std::size_t k = 0; k < out_order_[v].size(); ++k) out_rank_[out_order_[v][k]] = static_cast<int>(k);
    }
}

Framing Framing::id_order(const DirectedMultigraph& g) {
    std::vector<std::vector<int>> in(g.vertex_count() + 1), out(g.vertex_count() + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        in[v] = g.in_edges(v);
        out[v] = g.out_edges(v);
    }
    return Framing(g, std::move(in), std::move(out));
}

PrunedGraph prune_inner_vertices(const DirectedMultigraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw InputError("degenerate graph, empty flow polytope");
    std::vector<char> vertex_alive(n + 1, 1);
    std::vector<char> edge_alive(g.edge_count(), 1);
    std::vector<int> indeg(n + 1, 0), outdeg(n + 1, 0);
    for (const Edge& e : g.edges()) {
        ++outdeg[e.tail];
        ++indeg[e.head];
    }

    PrunedGraph result;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 2; v < n; ++v) {
            if (!vertex_alive[v] || (indeg[v] > 0 && outdeg[v] > 0)) continue;
            vertex_alive[v] = 0;
            result.removed_vertices.push_back(v);
            for (int id : g.in_edges(v)) {
                if (!edge_alive[id]) continue;
                edge_alive[id] = 0;
                --outdeg[g.edge(id).tail];
            }
            for (int id : g.out_edges(v)) {
                if (!edge_alive[id]) continue;
                edge_alive[id] = 0;
                --indeg[g.edge(id).head];
            }
            changed = true;
        }
    }

    std::vector<int> relabel(n + 1, 0);
    result.original_vertex.push_back(0);
    for (int v = 1; v <= n; ++v) {
        if (!vertex_alive[v]) continue;
        relabel[v] = static_cast<int>(result.original_vertex.size());
        result.original_vertex.push_back(v);
    }
    std::vector<std::pair<int, int>> kept;
    for (const Edge& e : g.edges()) {
        if (!edge_alive[e.id]) continue;
        kept.emplace_back(relabel[e.tail], relabel[e.head]);
        result.original_edge.push_back(e.id);
    }
    // Every surviving inner vertex has in- and out-edges, so a route exists iff an edge does.
    if (kept.empty()) throw InputError("degenerate graph, empty flow polytope");
    result.graph = DirectedMultigraph(static_cast<int>(result.original_vertex.size()) - 1, kept);
    return result;
}

namespace {

void extend_routes(const DirectedMultigraph& g, int v, std::vector<int>& path,
                   std::vector<Route>& out) {
    if (v == g.vertex_count()) {
        out.push_back(Route{path});
        return;
    }
    for (int id : g.out_edges(v)) {
        path.push_back(id);
        extend_routes(g, g.edge(id).head, path, out);
        path.pop_back();
    }
}

} // namespace

std::vector<Route> enumerate_routes(const DirectedMultigraph& g) {
    std::vector<Route> routes;
    if (g.vertex_count() < 2) return routes;
    std::vector<int> path;
    extend_routes(g, 1, path, routes);
    std::sort(routes.begin(), routes.end());
    return routes;
}

std::vector<int> route_vertices(const DirectedMultigraph& g, const Route& route) {
    std::vector<int> vertices;
    if (route.edges.empty()) return vertices;
    vertices.push_back(g.edge(route.edges.front()).tail);
    for (int id : route.edges) vertices.push_back(g.edge(id).head);
    return vertices;
}

std::vector<int> route_indicator(const DirectedMultigraph& g, const Route& route) {
    std::vector<int> x(g.edge_count(), 0);
    for (int id : route.edges) x[id] += 1;
    return x;
}

std::strong_ordering compare_into(const DirectedMultigraph& g, const Framing& f, int v,
                                  std::span<const int> p, std::span<const int> q) {
    if (p.empty() || q.empty() || g.edge(p.back()).head != v || g.edge(q.back()).head != v) {
        throw ContractError("compare_into: prefixes must end at vertex " + std::to_string(v));
    }
    auto i = static_cast<std::ptrdiff_t>(p.size()) - 1;
    auto j = static_cast<std::ptrdiff_t>(q.size()) - 1;
    while (i >= 0 && j >= 0 && p[i] == q[j]) {
        --i;
        --j;
    }
    if (i < 0 && j < 0) return std::strong_ordering::equal;
    if (i < 0 || j < 0) {
        throw ContractError("compare_into: one prefix is a proper suffix of the other");
    }
    if (g.edge(p[i]).head != g.edge(q[j]).head) {
        throw ContractError("compare_into: prefixes diverge at different vertices");
    }
    return f.in_rank(p[i]) <=> f.in_rank(q[j]);
}

std::strong_ordering compare_outof(const DirectedMultigraph& g, const Framing& f, int v,
                                   std::span<const int> p, std::span<const int> q) {
    if (p.empty() || q.empty() || g.edge(p.front()).tail != v || g.edge(q.front()).tail != v) {
        throw ContractError("compare_outof: suffixes must start at vertex " + std::to_string(v));
    }
    std::size_t i = 0;
    while (i < p.size() && i < q.size() && p[i] == q[i]) ++i;
    if (i == p.size() && i == q.size()) return std::strong_ordering::equal;
    if (i == p.size() || i == q.size()) {
        throw ContractError("compare_outof: one suffix is a proper prefix of the other");
    }
    if (g.edge(p[i]).tail != g.edge(q[i]).tail) {
        throw ContractError("compare_outof: suffixes diverge at different vertices");
    }
    return f.out_rank(p[i]) <=> f.out_rank(q[i]);
}

bool coherent(const DirectedMultigraph& g, const Framing& f, const Route& p, const Route& q) {
    // position_in_q[v] = number of edges of q before reaching v, or -1.
    std::vector<int> position_in_q(g.vertex_count() + 1, -1);
    for (std::size_t k = 0; k < q.edges.size(); ++k) {
        position_in_q[g.edge(q.edges[k]).head] = static_cast<int>(k) + 1;
    }
    const std::span<const int> ps(p.edges), qs(q.edges);
    for (std::size_t k = 0; k + 1 < p.edges.size(); ++k) {
        const int v = g.edge(p.edges[k]).head;
        const int split_q = position_in_q[v];
        if (split_q < 0) continue;
        const auto split_p = k + 1;
        const auto into = compare_into(g, f, v, ps.first(split_p), qs.first(split_q));
        const auto outof = compare_outof(g, f, v, ps.subspan(split_p), qs.subspan(split_q));
        if (into != 0 && outof != 0 && into != outof) return false;
    }
    return true;
}

std::vector<std::uint8_t> coherence_matrix_serial(const DirectedMultigraph& g, const Framing& f,
                                                  const std::vector<Route>& routes) {
    const std::size_t n = routes.size();
    std::vector<std::uint8_t> m(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint8_t c = coherent(g, f, routes[i], routes[j]) ? 1 : 0;
            m[i * n + j] = c;
            m[j * n + i] = c;
        }
    }
    return m;
}

std::vector<std::uint8_t> coherence_matrix(const DirectedMultigraph& g, const Framing& f,
                                           const std::vector<Route>& routes) {
    const auto n = static_cast<std::int64_t>(routes.size());
    std::vector<std::uint8_t> m(n * n, 1);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            const std::uint8_t c = coherent(g, f, routes[i], routes[j]) ? 1 : 0;
            m[i * n + j] = c;
            m[j * n + i] = c;
        }
    }
    return m;
}

std::vector<Framing> all_framings(const DirectedMultigraph& g) {
    // One slot per (inner vertex, in|out) list; enumerate the product of permutations.
    std::vector<std::vector<int>> in(g.vertex_count() + 1), out(g.vertex_count() + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        in[v] = g.in_edges(v);
        out[v] = g.out_edges(v);
    }
    std::vector<std::vector<int>*> slots;
    for (int v = 2; v < g.vertex_count(); ++v) {
        slots.push_back(&in[v]);
        slots.push_back(&out[v]);
    }
    std::vector<Framing> result;
    auto recurse = [&](auto&& self, std::size_t slot) -> void {
        if (slot == slots.size()) {
            result.emplace_back(g, in, out);
            return;
        }
        std::vector<int>& order = *slots[slot];
        std::sort(order.begin(), order.end());
        do {
            self(self, slot + 1);
        } while (std::next_permutation(order.begin(), order.end()));
    };
    recurse(recurse, 0);
    return result;
}

Framing random_framing(const DirectedMultigraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> in(g.vertex_count() + 1), out(g.vertex_count() + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        in[v] = g.in_edges(v);
        out[v] = g.out_edges(v);
        if (g.is_inner(v)) {
            std::shuffle(in[v].begin(), in[v].end(), rng);
            std::shuffle(out[v].begin(), out[v].end(), rng);
        }
    }
    return Framing(g, std::move(in), std::move(out));
}

} // namespace polyflow
