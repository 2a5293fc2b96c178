#ifndef POLYFLOW_KOSTANT_HPP
#define POLYFLOW_KOSTANT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "polyflow/common.hpp"
#include "polyflow/graph.hpp"

namespace polyflow {

// Prescribed netflow a_1..a_n (out minus in) at each vertex. Index 0 is unused
// so that entries line up with vertex labels.
class NetflowVector {
public:
    NetflowVector() = default;
    // `entries` lists a_1..a_n; must sum to zero.
    explicit NetflowVector(std::vector<std::int64_t> entries);

    int size() const { return static_cast<int>(values_.size()) - 1; }
    std::int64_t operator[](int v) const { return values_.at(v); }
    std::vector<std::int64_t> entries() const { return {values_.begin() + 1, values_.end()}; }

    // (t, 0, ..., 0, -t)
    static NetflowVector unit(int n, std::int64_t t = 1);
    // (0, d_2, ..., d_{n-1}, -sum d_i) with d_i = indegree(i) - 1.
    static NetflowVector volume_shift(const DirectedMultigraph& g);

private:
    std::vector<std::int64_t> values_;
};

// Nonnegative integer flow, indexed by edge id.
struct IntegerFlow {
    std::vector<std::int64_t> values;

    auto operator<=>(const IntegerFlow&) const = default;
    bool operator==(const IntegerFlow&) const = default;
};

// Netflow of `flow` at each vertex (index 0 unused).
std::vector<std::int64_t> netflow_of(const DirectedMultigraph& g, const IntegerFlow& flow);

// All nonnegative integer flows with netflow `a`, sorted.
std::vector<IntegerFlow> enumerate_integer_flows(const DirectedMultigraph& g, const NetflowVector& a);

// Kostant partition function K_G(a) by memoized transfer over vertices.
Integer kostant_value(const DirectedMultigraph& g, const NetflowVector& a);

// K_G(a) by exhaustive backtracking, without memoization. The OpenMP version
// splits the search over the choices made at the first vertex with outflow.
Integer count_integer_flows(const DirectedMultigraph& g, const NetflowVector& a);
Integer count_integer_flows_serial(const DirectedMultigraph& g, const NetflowVector& a);

// Normalized volume of F_G: K_G(0, d_2, ..., d_{n-1}, -sum d_i).
Integer flow_polytope_volume(const DirectedMultigraph& g);

// Number of lattice points in t * F_G: K_G(t, 0, ..., 0, -t).
Integer flow_ehrhart_value(const DirectedMultigraph& g, std::int64_t t);

// Coefficients (constant term first) of the Ehrhart polynomial of F_G, fitted
// through t = 0..dim and checked against t = dim+1 and dim+2. Throws
// InternalError if the check fails.
std::vector<Rational> flow_ehrhart_polynomial(const DirectedMultigraph& g);

// Exact Lagrange interpolation through (x_k, y_k); coefficients constant term first.
std::vector<Rational> interpolate(std::span<const Rational> xs, std::span<const Rational> ys);
Rational evaluate(std::span<const Rational> coefficients, const Rational& x);

} // namespace polyflow

#endif
