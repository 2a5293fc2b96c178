#include <doctest.h>

#include "polyflow/fixtures.hpp"
#include "polyflow/json_io.hpp"

using namespace polyflow;

TEST_CASE("graph JSON round trip") {
    const auto g = complete_graph(5);
    const Framing f = random_framing(g, 4);
    const GraphDocument doc = graph_from_json(graph_to_json(g, &f));
    CHECK(doc.graph.edge_count() == 10);
    REQUIRE(doc.framing.has_value());
    CHECK(*doc.framing == f);
    CHECK_FALSE(graph_from_json(graph_to_json(g)).framing.has_value());
}

TEST_CASE("graph JSON errors") {
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": [[1,2]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[1,"x"]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1,2],[2,3]], "framing": {"7": {}}})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1,2],[2,3]], "framing": {"2": {"in": [1]}}})")),
                    InputError);
    // Unlisted vertices keep id order.
    const auto doc = graph_from_json(Json::parse(R"({"n": 3, "edges": [[1,2],[2,3],[1,2]], "framing": {"2": {"in": [2,0]}}})"));
    CHECK(doc.framing->in_order(2) == std::vector<int>{2, 0});
    CHECK(doc.framing->out_order(1) == std::vector<int>{0, 2});
}

TEST_CASE("poset JSON") {
    const Poset p = staircase_star(4);
    const Poset q = poset_from_json(poset_to_json(p));
    CHECK(q.labels() == p.labels());
    CHECK(q.covers() == p.covers());
    REQUIRE(q.embedding().has_value());
    CHECK(q.embedding()->up == p.embedding()->up);
    CHECK(q.embedding()->minimal_order == p.embedding()->minimal_order);
    CHECK(isomorphic(dual_poset(poset_to_flow_graph(q)).poset, p));
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a","a"], "covers": []})")), InputError);
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a"], "covers": [["a","b"]]})")), InputError);
    CHECK_THROWS_AS(
        poset_from_json(Json::parse(R"({"elements": ["a","b"], "covers": [["a","b"]], "embedding": {"a": {"up": []}, "b": {}}})")),
        InputError);
}

TEST_CASE("triangulation and planar JSON") {
    const auto pg = low_point_fixture();
    const Json j = planar_to_json(pg);
    CHECK(j["regions"].size() == 6);
    CHECK(j["edge_sides"][3]["below"] == "bottom");
    const auto g = complete_graph(5);
    const Framing f = Framing::id_order(g);
    std::vector<Clique> cliques;
    std::vector<IntegerFlow> flows;
    for (const auto& leaf : ps_triangulation(g, f)) {
        cliques.push_back(leaf.routes);
        flows.push_back(leaf.flow);
    }
    const Json t = triangulation_to_json("ps", g, &f, cliques, &flows);
    CHECK(t["method"] == "ps");
    CHECK(t["simplices"].size() == 2);
    CHECK(t["simplices"][0]["routes"].size() == 7);
    CHECK(t["simplices"][0].contains("flow"));
}
