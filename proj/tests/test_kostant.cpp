#include <doctest.h>

#include "oracles.hpp"
#include "polyflow/fixtures.hpp"
#include "polyflow/kostant.hpp"

using namespace polyflow;

TEST_CASE("weak compositions and elementary numbers") {
    CHECK(weak_compositions(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(weak_compositions(0, 3).size() == 1);
    for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == Integer(std::to_string(oracle::catalan(n))));
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == Integer(std::to_string(oracle::binomial(n, k))));
    }
}

TEST_CASE("netflow vectors") {
    CHECK_THROWS_AS(NetflowVector({1, 0}), InputError);
    CHECK(NetflowVector::unit(4, 3).entries() == std::vector<std::int64_t>{3, 0, 0, -3});
    CHECK(NetflowVector::volume_shift(complete_graph(5)).entries() == std::vector<std::int64_t>{0, 0, 1, 2, -3});
}

TEST_CASE("Kostant partition function against naive enumeration") {
    const std::vector<DirectedMultigraph> graphs{complete_graph(4), complete_graph(5), triangle_graph(), parallel_edges(3),
                                                 low_point_fixture().graph};
    for (const auto& g : graphs) {
        const int n = g.vertex_count();
        for (const auto& d : weak_compositions(3, n - 1)) {
            std::vector<std::int64_t> a(d.begin(), d.end());
            std::int64_t total = 0;
            for (auto x : a) total += x;
            a.push_back(-total);
            const NetflowVector v(a);
            const std::vector<long> net(a.begin(), a.end());
            const auto expected = Integer(std::to_string(oracle::integer_flows(g, net, 3)));
            CHECK(kostant_value(g, v) == expected);
            CHECK(count_integer_flows(g, v) == expected);
            CHECK(count_integer_flows_serial(g, v) == expected);
            CHECK(enumerate_integer_flows(g, v).size() == oracle::integer_flows(g, net, 3));
        }
    }
}

TEST_CASE("enumerated flows have the requested netflow") {
    const auto g = complete_graph(5);
    const auto v = NetflowVector::volume_shift(g);
    for (const auto& flow : enumerate_integer_flows(g, v)) {
        const auto net = netflow_of(g, flow);
        for (int k = 1; k <= 5; ++k) CHECK(net[k] == v[k]);
    }
}

TEST_CASE("volume of F_{K_{n+1}} is a product of Catalan numbers") {
    for (int n = 2; n <= 6; ++n) {
        std::uint64_t product = 1;
        for (int i = 1; i <= n - 2; ++i) product *= oracle::catalan(i);
        CHECK(flow_polytope_volume(complete_graph(n + 1)) == Integer(std::to_string(product)));
    }
    CHECK(flow_polytope_volume(path_graph(5)) == 1);
    CHECK(flow_polytope_volume(parallel_edges(4)) == 1);
}

TEST_CASE("Ehrhart values and polynomial") {
    // t F of k parallel edges: compositions of t into k parts.
    for (int t = 0; t <= 4; ++t) CHECK(flow_ehrhart_value(parallel_edges(3), t) == Integer(std::to_string(oracle::binomial(t + 2, 2))));
    for (const auto& g : {complete_graph(4), complete_graph(5), low_point_fixture().graph}) {
        const auto poly = flow_ehrhart_polynomial(g);
        CHECK(static_cast<int>(poly.size()) == g.flow_dimension() + 1);
        for (int t = 0; t <= 6; ++t) CHECK(evaluate(poly, t) == Rational(flow_ehrhart_value(g, t)));
        // Leading coefficient times d! is the normalized volume.
        CHECK(poly.back() * Rational(factorial(g.flow_dimension())) == Rational(flow_polytope_volume(g)));
    }
}

TEST_CASE("interpolation reproduces a polynomial") {
    const std::vector<Rational> xs{0, 1, 2, 3};
    std::vector<Rational> ys;
    for (const auto& x : xs) ys.push_back(x * x * x - 2 * x + Rational(1, 2));
    const auto c = interpolate(xs, ys);
    CHECK(c == std::vector<Rational>{Rational(1, 2), -2, 0, 1});
}
