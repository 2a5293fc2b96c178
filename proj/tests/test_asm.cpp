#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polyflow/asm.hpp"
#include "polyflow/triangulations.hpp"

using namespace polyflow;

namespace {

Integer big(std::uint64_t v) {
    return Integer(std::to_string(v));
}

} // namespace

TEST_CASE("ASM enumeration") {
    for (int n = 1; n <= 4; ++n) CHECK(enumerate_asm(n).size() == oracle::alternating_sign_matrices(n));
    CHECK(enumerate_asm(5).size() == 429);
    for (const auto& m : enumerate_asm(4)) CHECK(is_alternating_sign_matrix(m));
    const auto five = enumerate_asm(5);
    CHECK(std::is_sorted(five.begin(), five.end()));
    CHECK_FALSE(is_alternating_sign_matrix(ASMatrix{2, {1, 1, 0, 0}}));
    CHECK_FALSE(is_alternating_sign_matrix(ASMatrix{3, {1, 0, 0, 0, 1, 0, 0, 1, 0}}));
}

TEST_CASE("vertices of P_lambda(n) obey the inequalities and the zero pattern") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& lambda : StaircaseShape::all(n)) {
            for (const auto& m : p_lambda_vertices(lambda)) {
                // Revalidated directly.
                for (int i = 1; i <= n; ++i) {
                    int row = 0, col = 0;
                    for (int j = 1; j <= n; ++j) {
                        row += m.at(i, j);
                        col += m.at(j, i);
                        CHECK(row >= 0);
                        CHECK(row <= 1);
                        CHECK(col >= 0);
                        CHECK(col <= 1);
                        if (i - j >= 2 || lambda.contains({i, j})) CHECK(m.at(i, j) == 0);
                    }
                    CHECK(row == 1);
                    CHECK(col == 1);
                }
            }
        }
    }
}

TEST_CASE("the lambda = empty face") {
    for (int n = 1; n <= 6; ++n) {
        const StaircaseShape empty(n, {});
        CHECK(p_lambda_vertices(empty).size() == oracle::catalan(n));
    }
    const FamilyReport r = family_report(StaircaseShape(3, {}));
    CHECK(r.vertex_count == 5);
    CHECK(r.dimension == 3);
    CHECK(r.volume_by_extensions == 2);
}

TEST_CASE("corner sums") {
    const StaircaseShape empty(3, {});
    // Identity: nothing to the north-east of the diagonal.
    const ASMatrix id{3, {1, 0, 0, 0, 1, 0, 0, 0, 1}};
    for (const auto& g : corner_sum_map(empty, id)) CHECK(g == 1);
    // The ASM with a -1 in the middle. Cells (1,2), (1,3), (2,3).
    const ASMatrix mid{3, {0, 1, 0, 1, -1, 1, 0, 1, 0}};
    CHECK(corner_sum_map(empty, mid) == std::vector<Rational>{0, 1, 0});
    const ASMatrix swap{3, {0, 1, 0, 1, 0, 0, 0, 0, 1}};
    CHECK(corner_sum_map(empty, swap) == std::vector<Rational>{0, 1, 1});
    // Points off the face are rejected.
    const ASMatrix anti{3, {0, 0, 1, 0, 1, 0, 1, 0, 0}};
    CHECK_THROWS_AS(corner_sum_map(empty, anti), InputError);
    CHECK_THROWS_AS(corner_sum_map(StaircaseShape(3, {1}), ASMatrix{3, {0, 0, 1, 1, 0, 0, 0, 1, 0}}), InputError);
    std::vector<std::vector<Rational>> half(3, std::vector<Rational>(3, 0));
    half[0][0] = half[0][1] = half[1][0] = half[1][1] = Rational(1, 2);
    half[2][2] = 1;
    const auto g = corner_sum_map(empty, half);
    CHECK(g == std::vector<Rational>{Rational(1, 2), 1, 1});
    half[0][0] = 1;
    CHECK_THROWS_AS(corner_sum_map(empty, half), InputError);
}

TEST_CASE("corner sums send vertices bijectively onto filter indicators") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& lambda : StaircaseShape::all(n)) {
            CAPTURE(lambda.to_string());
            std::set<IntegerPoint> image;
            for (const auto& m : p_lambda_vertices(lambda)) {
                IntegerPoint pt;
                for (const auto& v : corner_sum_map(lambda, m)) pt.push_back(v.get_num());
                image.insert(pt);
            }
            const auto verts = order_polytope_vertices(skew_star(lambda));
            CHECK(image.size() == p_lambda_vertices(lambda).size());
            CHECK(image == std::set<IntegerPoint>(verts.begin(), verts.end()));
        }
    }
}

TEST_CASE("dilations") {
    for (int n = 1; n <= 5; ++n) {
        for (int t = 0; t <= 3; ++t) CHECK(asm_dilation_count(StaircaseShape(n, {}), t) == proctor_ehrhart(n, t));
    }
    CHECK(asm_dilation_count(StaircaseShape(4, {}), 1) == 14);
    CHECK(asm_dilation_count(StaircaseShape(3, {}), 2) == 14);
    CHECK(proctor_ehrhart(3, 1) == 5);
    CHECK(proctor_ehrhart(4, 0) == 1);
}

TEST_CASE("tri-oracle Ehrhart agreement") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& lambda : StaircaseShape::all(n)) {
            const FamilyReport r = family_report(lambda, 3);
            CAPTURE(r.lambda);
            CHECK(r.all_consistent);
            for (const auto& row : r.ehrhart) {
                CHECK(row.asm_count == row.order_count);
                CHECK(row.order_count == row.flow_count);
                CHECK(row.order_count == big(oracle::order_polynomial(skew_star(lambda), row.t + 1)));
            }
        }
    }
}

TEST_CASE("bounded Dyck paths") {
    for (int n = 0; n <= 7; ++n) {
        for (int h = 0; h <= 4; ++h) CHECK(bounded_dyck_paths(n, h) == big(oracle::bounded_dyck_paths(n, h)));
        CHECK(bounded_dyck_paths(n, n) == big(oracle::catalan(n)));
    }
}

TEST_CASE("alternating permutations") {
    for (int n = 1; n <= 8; ++n) CHECK(alternating_permutations(n) == big(oracle::euler_zigzag(n)));
}

TEST_CASE("face dimensions") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& lambda : StaircaseShape::all(n)) {
            std::vector<IntegerPoint> pts;
            for (const auto& m : p_lambda_vertices(lambda)) pts.push_back(flatten(m));
            CHECK(affine_dimension(pts) == n * (n - 1) / 2 - lambda.size());
        }
    }
}
