#include <doctest.h>

#include "polyflow/fixtures.hpp"
#include "polyflow/lattice.hpp"
#include "polyflow/triangulations.hpp"

using namespace polyflow;

namespace {

IntegerMatrix matrix(std::vector<std::vector<int>> rows) {
    IntegerMatrix m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return m;
}

IntegerPoint point(std::vector<int> xs) {
    return IntegerPoint(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("rank and determinant") {
    CHECK(integer_rank(matrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
    CHECK(integer_rank(matrix({{0, 0}, {0, 0}})) == 0);
    CHECK(integer_determinant(matrix({{2, 1}, {1, 3}})) == 5);
    CHECK(integer_determinant(matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
    CHECK(integer_determinant(matrix({{1, 2}, {2, 4}})) == 0);
    CHECK(integer_determinant(matrix({{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 5, 0}, {1, 1, 1, 7}})) == 210);
}

TEST_CASE("integer kernel is a saturated basis") {
    const auto a = matrix({{2, 4, 6}});
    const auto k = integer_kernel(a, 3);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(2 * v[0] + 4 * v[1] + 6 * v[2] == 0);
    // (-2, 1, 0) and (-3, 0, 1) span the kernel lattice; their 2x2 minors have gcd 1.
    const Integer m1 = k[0][0] * k[1][1] - k[0][1] * k[1][0];
    const Integer m2 = k[0][0] * k[1][2] - k[0][2] * k[1][0];
    const Integer m3 = k[0][1] * k[1][2] - k[0][2] * k[1][1];
    Integer g;
    mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m3.get_mpz_t());
    CHECK(g == 1);
}

TEST_CASE("affine dimension") {
    CHECK(affine_dimension(std::vector<IntegerPoint>{point({1, 1}), point({2, 2}), point({3, 3})}) == 1);
    CHECK(affine_dimension(std::vector<IntegerPoint>{point({0, 0, 1})}) == 0);
    for (const auto& fx : graph_fixtures(6)) {
        CAPTURE(fx.name);
        CHECK(affine_dimension(flow_polytope_vertices(fx.graph)) == fx.graph.flow_dimension());
    }
    for (const auto& fx : poset_fixtures()) CHECK(affine_dimension(order_polytope_vertices(fx.poset)) == fx.poset.size());
}

TEST_CASE("normalized volume in the lattice of the affine hull") {
    const std::vector<IntegerPoint> square{point({0, 0}), point({1, 0}), point({0, 1}), point({1, 1})};
    const AffineLattice l(square);
    CHECK(l.dimension() == 2);
    CHECK(l.normalized_volume({point({0, 0}), point({1, 0}), point({0, 1})}) == 1);
    CHECK(l.normalized_volume({point({0, 0}), point({2, 0}), point({0, 2})}) == 4);
    CHECK(l.normalized_volume({point({0, 0}), point({1, 0}), point({2, 0})}) == 0);
    // A segment on the line x + y = 1 in the plane z = 3: unit length in its own lattice.
    const AffineLattice line({point({1, 0, 3}), point({0, 1, 3})});
    CHECK(line.dimension() == 1);
    CHECK(line.normalized_volume({point({1, 0, 3}), point({0, 1, 3})}) == 1);
    const AffineLattice diagonal({point({0, 0}), point({2, 2})});
    CHECK(diagonal.normalized_volume({point({0, 0}), point({2, 2})}) == 2);
}

TEST_CASE("triangulation checks catch bad input") {
    const std::vector<IntegerPoint> square{point({0, 0}), point({1, 0}), point({0, 1}), point({1, 1})};
    const LatticeSimplex lower{{point({0, 0}), point({1, 0}), point({0, 1})}};
    const LatticeSimplex upper{{point({1, 1}), point({1, 0}), point({0, 1})}};
    const LatticeSimplex other{{point({0, 0}), point({1, 0}), point({1, 1})}};
    CHECK(triangulation_checks(square, {lower, upper}, 2).ok);
    CHECK(triangulation_checks(square, {lower, upper}, 2, 200, kSampleSeed, Execution::serial).ok);
    // Wrong volume.
    CHECK_FALSE(triangulation_checks(square, {lower}, 2).ok);
    // Overlapping cover with the right total volume.
    CHECK_FALSE(triangulation_checks(square, {lower, other}, 2).ok);
    const auto rep = triangulation_checks(square, {lower, upper}, 2);
    CHECK(rep.samples_checked == 200);
    CHECK(rep.volume_sum == 2);
}
