#include "polyflow/kostant.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <omp.h>

namespace polyflow {

NetflowVector::NetflowVector(std::vector<std::int64_t> entries) {
    if (std::accumulate(entries.begin(), entries.end(), std::int64_t{0}) != 0) {
        throw InputError("netflow entries must sum to zero");
    }
    values_.reserve(entries.size() + 1);
    values_.push_back(0);
    values_.insert(values_.end(), entries.begin(), entries.end());
}

NetflowVector NetflowVector::unit(int n, std::int64_t t) {
    std::vector<std::int64_t> a(n, 0);
    if (n >= 2) {
        a.front() = t;
        a.back() = -t;
    }
    return NetflowVector(std::move(a));
}

NetflowVector NetflowVector::volume_shift(const DirectedMultigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::int64_t> a(n, 0);
    std::int64_t total = 0;
    for (int v = 2; v < n; ++v) {
        a[v - 1] = static_cast<std::int64_t>(g.in_edges(v).size()) - 1;
        total += a[v - 1];
    }
    if (n >= 2) a[n - 1] = -total;
    return NetflowVector(std::move(a));
}

std::vector<std::int64_t> netflow_of(const DirectedMultigraph& g, const IntegerFlow& flow) {
    std::vector<std::int64_t> net(g.vertex_count() + 1, 0);
    for (const Edge& e : g.edges()) {
        net[e.tail] += flow.values.at(e.id);
        net[e.head] -= flow.values.at(e.id);
    }
    return net;
}

namespace {

void check_netflow_size(const DirectedMultigraph& g, const NetflowVector& a) {
    if (a.size() != g.vertex_count()) {
        throw InputError("netflow vector has " + std::to_string(a.size()) + " entries, graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
}

// Backtracking over vertices in increasing order. `inflow[v]` accumulates the
// flow already routed into v by smaller vertices.
class FlowSearch {
public:
    FlowSearch(const DirectedMultigraph& g, const NetflowVector& a) : g_(g), a_(a) {}

    template <class Visit>
    void run(int v, std::vector<std::int64_t>& inflow, std::vector<std::int64_t>& flow,
             Visit&& visit) const {
        const int n = g_.vertex_count();
        const std::int64_t need = a_[v] + inflow[v];
        if (v == n) {
            if (need == 0) visit(flow);
            return;
        }
        if (need < 0) return;
        const auto& outs = g_.out_edges(v);
        if (outs.empty()) {
            if (need == 0) run(v + 1, inflow, flow, visit);
            return;
        }
        for (const auto& parts : weak_compositions(static_cast<int>(need), static_cast<int>(outs.size()))) {
            for (std::size_t k = 0; k < outs.size(); ++k) {
                flow[outs[k]] = parts[k];
                inflow[g_.edge(outs[k]).head] += parts[k];
            }
            run(v + 1, inflow, flow, visit);
            for (std::size_t k = 0; k < outs.size(); ++k) {
                inflow[g_.edge(outs[k]).head] -= parts[k];
                flow[outs[k]] = 0;
            }
        }
    }

private:
    const DirectedMultigraph& g_;
    const NetflowVector& a_;
};

struct PartialFlow {
    int vertex;
    std::vector<std::int64_t> inflow;
    std::vector<std::int64_t> flow;
};

// Expand the search breadth-first until there are enough independent subtrees.
std::vector<PartialFlow> flow_frontier(const DirectedMultigraph& g, const NetflowVector& a,
                                       std::size_t target) {
    const int n = g.vertex_count();
    std::vector<PartialFlow> frontier{
        {1, std::vector<std::int64_t>(n + 1, 0), std::vector<std::int64_t>(g.edge_count(), 0)}};
    while (frontier.size() < target) {
        if (std::all_of(frontier.begin(), frontier.end(), [n](const auto& s) { return s.vertex == n; })) break;
        std::vector<PartialFlow> next;
        for (auto& state : frontier) {
            const int v = state.vertex;
            if (v == n) {
                next.push_back(std::move(state));
                continue;
            }
            const std::int64_t need = a[v] + state.inflow[v];
            if (need < 0) continue;
            const auto& outs = g.out_edges(v);
            if (outs.empty()) {
                if (need == 0) next.push_back({v + 1, std::move(state.inflow), std::move(state.flow)});
                continue;
            }
            for (const auto& parts : weak_compositions(static_cast<int>(need), static_cast<int>(outs.size()))) {
                PartialFlow child{v + 1, state.inflow, state.flow};
                for (std::size_t k = 0; k < outs.size(); ++k) {
                    child.flow[outs[k]] = parts[k];
                    child.inflow[g.edge(outs[k]).head] += parts[k];
                }
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

class KostantMemo {
public:
    KostantMemo(const DirectedMultigraph& g, const NetflowVector& a)
        : g_(g), a_(a), memo_(g.vertex_count() + 1) {}

    Integer count(int v, std::vector<std::int64_t>& inflow) {
        const int n = g_.vertex_count();
        const std::int64_t need = a_[v] + inflow[v];
        if (v == n) return need == 0 ? Integer(1) : Integer(0);
        if (need < 0) return 0;
        std::vector<std::int64_t> key(inflow.begin() + v, inflow.end());
        auto found = memo_[v].find(key);
        if (found != memo_[v].end()) return found->second;

        Integer total = 0;
        const auto& outs = g_.out_edges(v);
        if (outs.empty()) {
            if (need == 0) total = count(v + 1, inflow);
        } else {
            for (const auto& parts : weak_compositions(static_cast<int>(need), static_cast<int>(outs.size()))) {
                for (std::size_t k = 0; k < outs.size(); ++k) inflow[g_.edge(outs[k]).head] += parts[k];
                total += count(v + 1, inflow);
                for (std::size_t k = 0; k < outs.size(); ++k) inflow[g_.edge(outs[k]).head] -= parts[k];
            }
        }
        memo_[v].emplace(std::move(key), total);
        return total;
    }

private:
    const DirectedMultigraph& g_;
    const NetflowVector& a_;
    std::vector<std::map<std::vector<std::int64_t>, Integer>> memo_;
};

} // namespace

std::vector<IntegerFlow> enumerate_integer_flows(const DirectedMultigraph& g, const NetflowVector& a) {
    check_netflow_size(g, a);
    std::vector<IntegerFlow> flows;
    std::vector<std::int64_t> inflow(g.vertex_count() + 1, 0);
    std::vector<std::int64_t> flow(g.edge_count(), 0);
    FlowSearch(g, a).run(1, inflow, flow, [&](const std::vector<std::int64_t>& f) {
        flows.push_back(IntegerFlow{f});
    });
    std::sort(flows.begin(), flows.end());
    return flows;
}

Integer count_integer_flows_serial(const DirectedMultigraph& g, const NetflowVector& a) {
    check_netflow_size(g, a);
    std::uint64_t count = 0;
    std::vector<std::int64_t> inflow(g.vertex_count() + 1, 0);
    std::vector<std::int64_t> flow(g.edge_count(), 0);
    FlowSearch(g, a).run(1, inflow, flow, [&](const auto&) { ++count; });
    return Integer(std::to_string(count));
}

Integer count_integer_flows(const DirectedMultigraph& g, const NetflowVector& a) {
    check_netflow_size(g, a);
    auto frontier = flow_frontier(g, a, 16 * static_cast<std::size_t>(omp_get_max_threads()));
    const FlowSearch search(g, a);
    const auto size = static_cast<std::int64_t>(frontier.size());
    std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
    for (std::int64_t k = 0; k < size; ++k) {
        PartialFlow& state = frontier[k];
        search.run(state.vertex, state.inflow, state.flow, [&](const auto&) { ++count; });
    }
    return Integer(std::to_string(count));
}

Integer kostant_value(const DirectedMultigraph& g, const NetflowVector& a) {
    check_netflow_size(g, a);
    std::vector<std::int64_t> inflow(g.vertex_count() + 1, 0);
    return KostantMemo(g, a).count(1, inflow);
}

Integer flow_polytope_volume(const DirectedMultigraph& g) {
    return kostant_value(g, NetflowVector::volume_shift(g));
}

Integer flow_ehrhart_value(const DirectedMultigraph& g, std::int64_t t) {
    if (t < 0) throw InputError("dilation factor must be nonnegative");
    return kostant_value(g, NetflowVector::unit(g.vertex_count(), t));
}

std::vector<Rational> interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size() || xs.empty()) throw ContractError("interpolate: bad sample sizes");
    const std::size_t m = xs.size();
    std::vector<Rational> result(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
        // basis polynomial prod_{j != k} (x - x_j) / (x_k - x_j)
        std::vector<Rational> basis{1};
        Rational denominator = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == k) continue;
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * xs[j];
            }
            basis = std::move(next);
            denominator *= xs[k] - xs[j];
        }
        if (denominator == 0) throw ContractError("interpolate: repeated abscissa");
        const Rational scale = ys[k] / denominator;
        for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
    }
    return result;
}

Rational evaluate(std::span<const Rational> coefficients, const Rational& x) {
    Rational value = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * x + *it;
    return value;
}

std::vector<Rational> flow_ehrhart_polynomial(const DirectedMultigraph& g) {
    const int dim = g.flow_dimension();
    if (dim < 0) throw ContractError("flow_ehrhart_polynomial: graph must be pruned");
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= dim; ++t) {
        xs.emplace_back(t);
        ys.emplace_back(flow_ehrhart_value(g, t));
    }
    auto poly = interpolate(xs, ys);
    for (int t = dim + 1; t <= dim + 2; ++t) {
        if (evaluate(poly, Rational(t)) != Rational(flow_ehrhart_value(g, t))) {
            throw InternalError("lattice-point counts are not polynomial of degree " + std::to_string(dim));
        }
    }
    return poly;
}

} // namespace polyflow
