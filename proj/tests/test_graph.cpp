#include <doctest.h>

#include "oracles.hpp"
#include "polyflow/fixtures.hpp"
#include "polyflow/graph.hpp"

using namespace polyflow;

TEST_CASE("graph rejects edges that do not point upward") {
    CHECK_THROWS_AS(DirectedMultigraph(3, {{2, 1}}), InputError);
    CHECK_THROWS_AS(DirectedMultigraph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(DirectedMultigraph(3, {{1, 4}}), InputError);
}

TEST_CASE("routes of K_n") {
    for (int n = 2; n <= 7; ++n) {
        const auto g = complete_graph(n);
        const auto routes = enumerate_routes(g);
        CHECK(routes.size() == (std::size_t{1} << (n - 2)));
        std::set<std::vector<int>> mine;
        for (const auto& r : routes) mine.insert(r.edges);
        CHECK(mine == oracle::routes(g));
        CHECK(std::is_sorted(routes.begin(), routes.end()));
    }
}

TEST_CASE("route vertices and indicator") {
    const auto g = complete_graph(4);
    const Route r{{1, 5}};
    CHECK(route_vertices(g, r) == std::vector<int>{1, 3, 4});
    CHECK(route_indicator(g, r) == std::vector<int>{0, 1, 0, 0, 0, 1});
}

TEST_CASE("pruning removes dead ends and relabels") {
    // 2 has only incoming edges, 3 only outgoing.
    DirectedMultigraph g(5, {{1, 2}, {1, 4}, {3, 4}, {4, 5}, {1, 5}});
    const auto p = prune_inner_vertices(g);
    CHECK(p.graph.vertex_count() == 3);
    CHECK(p.graph.edge_count() == 3);
    CHECK(p.original_vertex == std::vector<int>{0, 1, 4, 5});
    CHECK(p.original_edge == std::vector<int>{1, 3, 4});
    CHECK_THROWS_AS(prune_inner_vertices(DirectedMultigraph(3, {{1, 2}})), InputError);
}

TEST_CASE("K_4 under the top-to-bottom framing: all four routes coherent") {
    const auto g = complete_graph(4);
    const auto f = planar_arc_orders(g);
    const auto routes = enumerate_routes(g);
    REQUIRE(routes.size() == 4);
    for (const auto& p : routes) {
        for (const auto& q : routes) CHECK(coherent(g, f, p, q));
    }
}

TEST_CASE("coherence agrees with the definition under every framing of K_4 and K_5") {
    for (int n : {4, 5}) {
        const auto g = complete_graph(n);
        const auto routes = enumerate_routes(g);
        for (const auto& f : all_framings(g)) {
            for (const auto& p : routes) {
                for (const auto& q : routes) CHECK(coherent(g, f, p, q) == oracle::coherent(g, f, p.edges, q.edges));
            }
        }
    }
}

TEST_CASE("coherence matrix: parallel equals serial and is symmetric") {
    const auto g = complete_graph(7);
    const auto f = random_framing(g, 11);
    const auto routes = enumerate_routes(g);
    const auto a = coherence_matrix(g, f, routes);
    CHECK(a == coherence_matrix_serial(g, f, routes));
    const std::size_t m = routes.size();
    for (std::size_t i = 0; i < m; ++i) {
        CHECK(a[i * m + i] == 1);
        for (std::size_t j = 0; j < m; ++j) CHECK(a[i * m + j] == a[j * m + i]);
    }
}

TEST_CASE("framings") {
    // K_5: vertex 2 has 1 in / 3 out, vertex 3 has 2 / 2, vertex 4 has 3 / 1.
    CHECK(all_framings(complete_graph(5)).size() == 6 * 4 * 6);
    CHECK(all_framings(complete_graph(4)).size() == 4);
    const auto g = complete_graph(6);
    CHECK(random_framing(g, 3) == random_framing(g, 3));
    const auto id = Framing::id_order(g);
    CHECK(id.out_order(1) == g.out_edges(1));
    CHECK_THROWS_AS(Framing(g, {{}, {}, {}, {}, {}, {}, {}}, {{}, {}, {}, {}, {}, {}, {}}), InputError);
}
