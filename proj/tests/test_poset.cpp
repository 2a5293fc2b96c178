#include <doctest.h>

#include "oracles.hpp"
#include "polyflow/fixtures.hpp"
#include "polyflow/poset.hpp"

using namespace polyflow;

namespace {

Integer big(std::uint64_t v) {
    return Integer(std::to_string(v));
}

} // namespace

TEST_CASE("construction validates covers") {
    CHECK_THROWS_AS(Poset({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Poset({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), InputError);
    CHECK_THROWS_AS(Poset({"a"}, {{0, 3}}), InputError);
    const Poset p = Poset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers().size() == 2);
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
}

TEST_CASE("linear extensions, ideals and the order polynomial against brute force") {
    for (const auto& fx : poset_fixtures()) {
        const Poset& p = fx.poset;
        CAPTURE(fx.name);
        const auto e = big(oracle::linear_extensions(p));
        CHECK(count_linear_extensions(p) == e);
        CHECK(count_linear_extensions_backtracking(p) == e);
        CHECK(Integer(static_cast<unsigned long>(linear_extensions(p).size())) == e);
        for (const auto& ext : linear_extensions(p)) CHECK(is_linear_extension(p, ext.order));
        CHECK(order_ideals(p).size() == oracle::order_ideals(p));
        for (int m = 0; m <= 4; ++m) {
            CHECK(order_polynomial(p, m) == big(oracle::order_polynomial(p, m)));
            CHECK(order_polynomial_bruteforce(p, m) == big(oracle::order_polynomial(p, m)));
        }
        CHECK(order_preserving_maps(p, 2).size() == oracle::order_polynomial(p, 3));
    }
}

TEST_CASE("closed forms") {
    for (int k = 1; k <= 6; ++k) {
        CHECK(count_linear_extensions(chain(k)) == 1);
        CHECK(count_linear_extensions(antichain(k)) == big(oracle::factorial(k)));
        CHECK(order_ideals(chain(k)).size() == static_cast<std::size_t>(k + 1));
        CHECK(order_ideals(antichain(k)).size() == (std::size_t{1} << k));
        // Zigzag: Euler numbers and Fibonacci ideals.
        CHECK(count_linear_extensions(zigzag(k)) == big(oracle::euler_zigzag(k)));
        CHECK(order_ideals(zigzag(k)).size() == oracle::fibonacci(k + 2));
        CHECK(order_polynomial(chain(k), 3) == big(oracle::binomial(k + 2, 2)));
    }
    CHECK(count_linear_extensions(zigzag(5)) == 16);
}

TEST_CASE("staircase posets") {
    for (int n = 1; n <= 6; ++n) {
        const Poset p = staircase_star(n);
        CHECK(p.size() == n * (n - 1) / 2);
        CHECK(order_ideals(p).size() == oracle::catalan(n));
        if (n <= 5) CHECK(staircase_syt_count(n) == big(oracle::linear_extensions(p)));
    }
    CHECK(staircase_syt_count(3) == 2);
    CHECK(staircase_syt_count(4) == 16);
    CHECK(staircase_syt_count(5) == 768);
}

TEST_CASE("staircase shapes") {
    CHECK_THROWS_AS(StaircaseShape(3, {3}), InputError);
    CHECK_THROWS_AS(StaircaseShape(4, {1, 2}), InputError);
    CHECK_THROWS_AS(StaircaseShape(4, {2, 2, 2}), InputError);
    const StaircaseShape s(5, {2, 1, 1, 0});
    CHECK(s.to_string() == "(2,1,1)");
    CHECK(s.size() == 4);
    CHECK(s.contains({1, 4}));
    CHECK(s.contains({3, 5}));
    CHECK_FALSE(s.contains({2, 4}));
    CHECK(StaircaseShape(4, {}).to_string() == "()");
    CHECK(StaircaseShape::staircase(5, 3).parts() == std::vector<int>{2, 1});
    // Partitions inside delta_n: Catalan many.
    for (int n = 1; n <= 6; ++n) CHECK(StaircaseShape::all(n).size() == oracle::catalan(n));
    const auto cells = skew_cells(StaircaseShape(4, {2}));
    CHECK(cells == std::vector<Cell>{{1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("skew star poset order") {
    const Poset p = skew_star(StaircaseShape(4, {}));
    const auto cells = skew_cells(StaircaseShape(4, {}));
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = 0; b < cells.size(); ++b) {
            const bool expected = a != b && cells[a].row >= cells[b].row && cells[a].col <= cells[b].col;
            CHECK(p.less(a, b) == expected);
        }
    }
}

TEST_CASE("isomorphism") {
    CHECK(isomorphic(zigzag(4), Poset({"w", "x", "y", "z"}, {{1, 0}, {1, 2}, {3, 2}})));
    CHECK_FALSE(isomorphic(zigzag(4), chain(4)));
    CHECK(isomorphic(staircase_star(3), Poset({"a", "b", "c"}, {{0, 2}, {1, 2}})));
}
