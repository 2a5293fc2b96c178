#include "polyflow/triangulations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polyflow {

std::vector<CanonicalSimplex> canonical_triangulation(const Poset& p) {
    std::vector<CanonicalSimplex> out;
    const int m = p.size();
    for (auto& ext : linear_extensions(p)) {
        LatticeSimplex s;
        for (int k = 0; k <= m; ++k) {
            IntegerPoint v(m, 1);
            for (int q = 0; q < k; ++q) v[ext.order[q]] = 0;
            s.vertices.push_back(std::move(v));
        }
        out.push_back({std::move(ext), std::move(s)});
    }
    return out;
}

std::vector<IntegerPoint> order_polytope_vertices(const Poset& p) {
    std::vector<IntegerPoint> out;
    for (const OrderIdeal& ideal : order_ideals(p)) {
        IntegerPoint v(p.size(), 1);
        for (int x : ideal.elements()) v[x] = 0;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::pair<int, int>> NoncrossingTree::edges() const {
    std::vector<std::pair<int, int>> out;
    int p = 0;
    for (int k = 0; k < right; ++k) {
        for (int q = p; q <= p + composition[k]; ++q) out.emplace_back(q, k);
        p += composition[k];
    }
    return out;
}

NoncrossingTree noncrossing_tree(int left, std::vector<int> composition) {
    if (left < 1 || composition.empty()) throw ContractError("noncrossing tree needs nonempty sides");
    int total = 0;
    for (int b : composition) {
        if (b < 0) throw ContractError("composition parts must be nonnegative");
        total += b;
    }
    if (total != left - 1) throw ContractError("composition must sum to left - 1");
    const int right = static_cast<int>(composition.size());
    return NoncrossingTree{left, right, std::move(composition)};
}

std::vector<NoncrossingTree> noncrossing_trees(int left, int right) {
    if (left < 1 || right < 1) throw ContractError("noncrossing trees need nonempty sides");
    std::vector<NoncrossingTree> out;
    for (auto& c : weak_compositions(left - 1, right)) out.push_back(NoncrossingTree{left, right, std::move(c)});
    return out;
}

ReductionState ReductionState::initial(const DirectedMultigraph& g, const Framing& f) {
    ReductionState s;
    s.n_ = g.vertex_count();
    for (const Edge& e : g.edges()) s.edges_.push_back({e.tail, e.head, {e.id}});
    s.in_.resize(s.n_ + 1);
    s.out_.resize(s.n_ + 1);
    for (int v = 1; v <= s.n_; ++v) {
        s.in_[v] = f.in_order(v);
        s.out_[v] = f.out_order(v);
    }
    s.flow_.values.assign(g.edge_count(), 0);
    return s;
}

ReductionState ReductionState::reduce(int i, const NoncrossingTree& tree) const {
    if (i <= 1 || i >= n_) throw ContractError("reduction vertex must be inner");
    const auto& ins = in_[i];
    const auto& outs = out_[i];
    if (tree.left != static_cast<int>(ins.size()) || tree.right != static_cast<int>(outs.size())) {
        throw ContractError("tree shape does not match vertex " + std::to_string(i));
    }
    for (int k = 0; k < tree.right; ++k) {
        if (edges_[outs[k]].path.size() != 1) throw InternalError("out-edge of the reduced vertex is not original");
    }

    ReductionState next;
    next.n_ = n_;
    next.flow_ = flow_;
    next.trace_ = trace_;
    next.trace_.steps.push_back({i, tree});

    std::vector<int> remap(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].tail == i || edges_[e].head == i) continue;
        remap[e] = static_cast<int>(next.edges_.size());
        next.edges_.push_back(edges_[e]);
    }
    // joined[k]: new edges through out-edge k, top to bottom.
    std::vector<std::vector<int>> joined(tree.right);
    for (const auto& [q, k] : tree.edges()) {
        const StateEdge& in_edge = edges_[ins[q]];
        const StateEdge& out_edge = edges_[outs[k]];
        StateEdge sum{in_edge.tail, out_edge.head, in_edge.path};
        sum.path.insert(sum.path.end(), out_edge.path.begin(), out_edge.path.end());
        joined[k].push_back(static_cast<int>(next.edges_.size()));
        next.edges_.push_back(std::move(sum));
    }
    for (int k = 0; k < tree.right; ++k) next.flow_.values[edges_[outs[k]].path.front()] = tree.composition[k];

    std::vector<int> out_position(edges_.size(), -1);
    for (int k = 0; k < tree.right; ++k) out_position[outs[k]] = k;
    next.in_.assign(n_ + 1, {});
    next.out_.assign(n_ + 1, {});
    for (int v = 1; v <= n_; ++v) {
        if (v == i) continue;
        for (int e : in_[v]) {
            if (out_position[e] >= 0) {
                for (int id : joined[out_position[e]]) next.in_[v].push_back(id);
            } else if (remap[e] >= 0) {
                next.in_[v].push_back(remap[e]);
            }
        }
        for (int e : out_[v]) {
            if (remap[e] >= 0) next.out_[v].push_back(remap[e]);
        }
    }
    // New edges leave vertices below i, where the order no longer matters.
    for (int k = 0; k < tree.right; ++k) {
        for (int id : joined[k]) next.out_[next.edges_[id].tail].push_back(id);
    }
    return next;
}

bool ReductionState::is_leaf() const {
    return std::all_of(edges_.begin(), edges_.end(), [&](const StateEdge& e) { return e.tail == 1 && e.head == n_; });
}

Clique ReductionState::routes() const {
    Clique out;
    for (const auto& e : edges_) out.push_back(Route{e.path});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_pruned(const DirectedMultigraph& g) {
    for (int v = 2; v < g.vertex_count(); ++v) {
        if (g.in_edges(v).empty() || g.out_edges(v).empty()) {
            throw ContractError("graph must be pruned (vertex " + std::to_string(v) + ")");
        }
    }
}

PSLeaf make_leaf(const ReductionState& s) {
    if (!s.is_leaf()) throw InternalError("reduction finished with edges away from 1 and n");
    return PSLeaf{s.routes(), s.flow(), s.trace()};
}

void explore_serial(const ReductionState& s, int i, std::vector<PSLeaf>& out) {
    if (i >= s.vertex_count()) {
        out.push_back(make_leaf(s));
        return;
    }
    const int left = static_cast<int>(s.in_order(i).size());
    const int right = static_cast<int>(s.out_order(i).size());
    for (const auto& tree : noncrossing_trees(left, right)) explore_serial(s.reduce(i, tree), i + 1, out);
}

// Spawns one task per tree choice until `depth` vertices have been branched on.
std::vector<PSLeaf> explore_tasks(const ReductionState& s, int i, int depth) {
    std::vector<PSLeaf> out;
    if (depth == 0 || i >= s.vertex_count()) {
        explore_serial(s, i, out);
        return out;
    }
    const auto trees = noncrossing_trees(static_cast<int>(s.in_order(i).size()),
                                         static_cast<int>(s.out_order(i).size()));
    std::vector<std::vector<PSLeaf>> parts(trees.size());
    for (std::size_t k = 0; k < trees.size(); ++k) {
#pragma omp task default(none) shared(parts, trees, s) firstprivate(k, i, depth)
        parts[k] = explore_tasks(s.reduce(i, trees[k]), i + 1, depth - 1);
    }
#pragma omp taskwait
    for (auto& part : parts) {
        for (auto& leaf : part) out.push_back(std::move(leaf));
    }
    return out;
}

void sort_leaves(std::vector<PSLeaf>& leaves) {
    std::sort(leaves.begin(), leaves.end(), [](const PSLeaf& a, const PSLeaf& b) { return a.trace < b.trace; });
}

} // namespace

std::vector<PSLeaf> ps_triangulation_serial(const DirectedMultigraph& g, const Framing& f) {
    check_pruned(g);
    std::vector<PSLeaf> leaves;
    explore_serial(ReductionState::initial(g, f), 2, leaves);
    sort_leaves(leaves);
    return leaves;
}

std::vector<PSLeaf> ps_triangulation(const DirectedMultigraph& g, const Framing& f) {
    check_pruned(g);
    std::vector<PSLeaf> leaves;
    const ReductionState start = ReductionState::initial(g, f);
#pragma omp parallel default(none) shared(leaves, start)
#pragma omp single
    leaves = explore_tasks(start, 2, 4);
    sort_leaves(leaves);
    return leaves;
}

namespace {

// Bron-Kerbosch with pivoting on an adjacency matrix.
void bron_kerbosch(const std::vector<std::uint8_t>& adj, std::size_t n, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (int u : *set) {
            std::size_t c = 0;
            for (int v : p) c += adj[u * n + v];
            if (pivot < 0 || c > best) {
                pivot = u;
                best = c;
            }
        }
    }
    std::vector<int> candidates;
    for (int v : p) {
        if (!adj[pivot * n + v]) candidates.push_back(v);
    }
    for (int v : candidates) {
        std::vector<int> np, nx;
        for (int u : p) {
            if (adj[v * n + u]) np.push_back(u);
        }
        for (int u : x) {
            if (adj[v * n + u]) nx.push_back(u);
        }
        r.push_back(v);
        bron_kerbosch(adj, n, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace

std::vector<Clique> dkk_maximal_cliques(const DirectedMultigraph& g, const Framing& f, Execution execution) {
    const auto routes = enumerate_routes(g);
    const std::size_t n = routes.size();
    auto adj = execution == Execution::parallel ? coherence_matrix(g, f, routes)
                                                : coherence_matrix_serial(g, f, routes);
    for (std::size_t i = 0; i < n; ++i) adj[i * n + i] = 0;
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> found;
    std::vector<int> r;
    bron_kerbosch(adj, n, r, all, {}, found);

    const auto expected = static_cast<std::size_t>(g.edge_count() - g.vertex_count() + 2);
    std::vector<Clique> cliques;
    for (const auto& members : found) {
        if (members.size() != expected) {
            throw InternalError("coherence relation violates DKK top-dimensionality: maximal clique of size " +
                                std::to_string(members.size()) + ", expected " + std::to_string(expected));
        }
        Clique c;
        for (int k : members) c.push_back(routes[k]);
        std::sort(c.begin(), c.end());
        cliques.push_back(std::move(c));
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

LatticeSimplex clique_simplex(const DirectedMultigraph& g, const Clique& clique) {
    LatticeSimplex s;
    for (const Route& r : clique) {
        IntegerPoint v;
        for (int x : route_indicator(g, r)) v.emplace_back(x);
        s.vertices.push_back(std::move(v));
    }
    return s;
}

std::vector<LatticeSimplex> dkk_triangulation(const DirectedMultigraph& g, const Framing& f) {
    std::vector<LatticeSimplex> out;
    for (const auto& c : dkk_maximal_cliques(g, f)) out.push_back(clique_simplex(g, c));
    return out;
}

std::vector<IntegerPoint> flow_polytope_vertices(const DirectedMultigraph& g) {
    return clique_simplex(g, enumerate_routes(g)).vertices;
}

Clique linext_to_clique(const PlanarGraphData& pg, const LinearExtension& ext) {
    const int m = static_cast<int>(pg.regions.size());
    std::vector<int> position(m, -1);
    if (static_cast<int>(ext.order.size()) != m) throw InputError("extension has the wrong length");
    for (int k = 0; k < m; ++k) {
        const int x = ext.order[k];
        if (x < 0 || x >= m || position[x] >= 0) throw InputError("extension is not a permutation of the regions");
        position[x] = k;
    }
    for (const EdgeSides& s : pg.edge_sides) {
        if (s.below >= 0 && s.above >= 0 && position[s.below] > position[s.above]) {
            throw InputError("not a linear extension of the region poset");
        }
    }
    const DirectedMultigraph& g = pg.graph;
    Clique clique;
    for (int k = 0; k <= m; ++k) {
        auto inside = [&](int side) { return side == kBottom || (side >= 0 && position[side] < k); };
        std::vector<int> boundary;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (inside(pg.edge_sides[e].below) && !inside(pg.edge_sides[e].above)) boundary.push_back(e);
        }
        Route route;
        int v = 1;
        while (v != g.vertex_count()) {
            int chosen = -1;
            for (int e : boundary) {
                if (g.edge(e).tail != v) continue;
                if (chosen >= 0) throw InternalError("upper boundary branches at vertex " + std::to_string(v));
                chosen = e;
            }
            if (chosen < 0) throw InternalError("upper boundary breaks off at vertex " + std::to_string(v));
            route.edges.push_back(chosen);
            v = g.edge(chosen).head;
        }
        if (route.edges.size() != boundary.size()) throw InternalError("upper boundary is not a single route");
        clique.push_back(std::move(route));
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

Clique flow_to_clique(const DirectedMultigraph& g, const Framing& f, const IntegerFlow& flow) {
    check_pruned(g);
    if (static_cast<int>(flow.values.size()) != g.edge_count() ||
        netflow_of(g, flow) != [&] {
            auto shift = NetflowVector::volume_shift(g).entries();
            shift.insert(shift.begin(), 0);
            return shift;
        }()) {
        throw InputError("flow not realizable: netflow must be (0, d_2, ..., d_{n-1}, -sum d_i)");
    }
    ReductionState s = ReductionState::initial(g, f);
    for (int i = 2; i < g.vertex_count(); ++i) {
        std::vector<int> parts;
        for (int e : s.out_order(i)) {
            const std::int64_t b = flow.values.at(s.edges()[e].path.front());
            if (b < 0) throw InputError("flow not realizable: negative entry");
            parts.push_back(static_cast<int>(b));
        }
        const int left = static_cast<int>(s.in_order(i).size());
        if (std::accumulate(parts.begin(), parts.end(), 0) != left - 1) {
            throw InputError("flow not realizable at vertex " + std::to_string(i));
        }
        s = s.reduce(i, noncrossing_tree(left, std::move(parts)));
    }
    if (s.flow() != flow) throw InternalError("replayed reduction does not reproduce the flow");
    return s.routes();
}

IntegerFlow clique_to_flow(const std::vector<PSLeaf>& leaves, const Clique& clique) {
    Clique sorted = clique;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& leaf : leaves) {
        if (leaf.routes == sorted) return leaf.flow;
    }
    throw InputError("not a maximal clique of this framed graph");
}

IntegerFlow clique_to_flow(const DirectedMultigraph& g, const Framing& f, const Clique& clique) {
    return clique_to_flow(ps_triangulation(g, f), clique);
}

std::map<Clique, Clique> framing_change_bijection(const DirectedMultigraph& g, const Framing& f1,
                                                  const Framing& f2) {
    const auto first = ps_triangulation(g, f1);
    const auto second = ps_triangulation(g, f2);
    std::map<IntegerFlow, const Clique*> by_flow;
    for (const auto& leaf : second) by_flow.emplace(leaf.flow, &leaf.routes);
    std::map<Clique, Clique> out;
    for (const auto& leaf : first) {
        auto it = by_flow.find(leaf.flow);
        if (it == by_flow.end()) throw InternalError("integer flow missing under the second framing");
        out.emplace(leaf.routes, *it->second);
    }
    return out;
}

TriangulationComparison compare_triangulations(const std::vector<LatticeSimplex>& a,
                                               const std::vector<LatticeSimplex>& b) {
    std::set<std::vector<IntegerPoint>> ka, kb;
    for (const auto& s : a) ka.insert(s.key());
    for (const auto& s : b) kb.insert(s.key());
    TriangulationComparison cmp;
    std::set_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(cmp.only_in_first));
    std::set_difference(kb.begin(), kb.end(), ka.begin(), ka.end(), std::back_inserter(cmp.only_in_second));
    cmp.equal = cmp.only_in_first.empty() && cmp.only_in_second.empty() && ka.size() == a.size() &&
                kb.size() == b.size();
    return cmp;
}

std::vector<LatticeSimplex> transported_canonical_triangulation(const PlanarGraphData& pg) {
    const DualPoset dp = dual_poset(pg);
    std::vector<LatticeSimplex> out;
    for (const auto& cs : canonical_triangulation(dp.poset)) {
        LatticeSimplex s;
        for (const auto& v : cs.simplex.vertices) {
            std::vector<Rational> f(v.begin(), v.end());
            IntegerPoint flow;
            for (const Rational& x : order_to_flow_point(pg, f)) {
                if (x.get_den() != 1) throw InternalError("o-f map sent a vertex to a non-integral point");
                flow.push_back(x.get_num());
            }
            s.vertices.push_back(std::move(flow));
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace polyflow
