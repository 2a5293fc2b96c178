#ifndef POLYFLOW_ASM_HPP
#define POLYFLOW_ASM_HPP

#include <string>
#include <vector>

#include "polyflow/common.hpp"
#include "polyflow/lattice.hpp"
#include "polyflow/poset.hpp"

namespace polyflow {

// n x n matrix with entries in {-1, 0, 1}, stored row-major.
struct ASMatrix {
    int n = 0;
    std::vector<int> entries;

    int at(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }
    auto operator<=>(const ASMatrix&) const = default;
    bool operator==(const ASMatrix&) const = default;
};

// Row/column sums 1 and all partial row and column sums in {0, 1}.
bool is_alternating_sign_matrix(const ASMatrix& m);

// All n x n ASMs in lexicographic order of their entries.
std::vector<ASMatrix> enumerate_asm(int n);

// Zero pattern of P_lambda(n): cells with i - j >= 2 and cells of lambda.
bool forced_zero(const StaircaseShape& lambda, int i, int j);

// ASMs respecting the zero pattern; the vertices of P_lambda(n).
std::vector<ASMatrix> p_lambda_vertices(const StaircaseShape& lambda);

IntegerPoint flatten(const ASMatrix& m);

// g(i, j) = 1 - sum_{i' <= i, j' >= j} m_{i'j'} on the cells of delta_n \ lambda
// (in skew_cells order). `m` is an n x n rational matrix, validated against the
// inequalities of P_lambda(n); the image is checked to be order preserving.
std::vector<Rational> corner_sum_map(const StaircaseShape& lambda,
                                     const std::vector<std::vector<Rational>>& m);
std::vector<Rational> corner_sum_map(const StaircaseShape& lambda, const ASMatrix& m);

// Integer points of t * P_lambda(n): integer matrices with row and column sums t,
// partial row and column sums in [0, t], and the zero pattern.
Integer asm_dilation_count(const StaircaseShape& lambda, int t);

// prod_{1 <= i < j <= n} (2t + i + j - 1) / (i + j - 1).
Integer proctor_ehrhart(int n, int t);

// Dyck paths of semilength n staying at height <= max_height.
Integer bounded_dyck_paths(int n, int max_height);

// Alternating permutations of [n] (the Euler zigzag number E_n), by brute force.
Integer alternating_permutations(int n);

struct EhrhartRow {
    int t;
    Integer asm_count;
    Integer order_count;
    Integer flow_count;
};

struct FamilyReport {
    int n = 0;
    std::string lambda;
    std::size_t vertex_count = 0;
    std::size_t order_ideal_count = 0;
    int dimension = 0;
    int expected_dimension = 0;
    Integer volume_by_extensions;
    Integer volume_by_kostant;
    Integer volume_by_dkk;
    std::vector<EhrhartRow> ehrhart;
    bool all_consistent = false;
};

// Every route to the volume, dimension and t = 0..max_t Ehrhart values of
// P_lambda(n), compared against each other.
FamilyReport family_report(const StaircaseShape& lambda, int max_t = 3);

} // namespace polyflow

#endif
