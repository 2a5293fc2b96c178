#ifndef POLYFLOW_POSET_HPP
#define POLYFLOW_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyflow/common.hpp"

namespace polyflow {

// Upward planar drawing of a Hasse diagram: for each element, its upper and
// lower covers left to right; plus the left-to-right order of the minimal
// elements (seen from an added bottom) and of the maximal elements (seen from
// an added top).
struct HasseEmbedding {
    std::vector<std::vector<int>> up;
    std::vector<std::vector<int>> down;
    std::vector<int> minimal_order;
    std::vector<int> maximal_order;
};

// Finite poset on elements 0..size-1 given by its cover relations.
class Poset {
public:
    Poset() = default;
    // Covers are (lower, upper) index pairs; they must be acyclic and
    // irredundant.
    Poset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers,
          std::optional<HasseEmbedding> embedding = std::nullopt);

    // Builds the poset generated by arbitrary relations (lower, upper),
    // reducing them to covers.
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<std::pair<int, int>>& relations);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_.at(x); }
    int index_of(const std::string& label) const;

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return up_.at(x); }
    const std::vector<int>& lower_covers(int x) const { return down_.at(x); }

    // Strict order x < y.
    bool less(int x, int y) const { return less_[x * size() + y] != 0; }
    bool leq(int x, int y) const { return x == y || less(x, y); }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    const std::optional<HasseEmbedding>& embedding() const { return embedding_; }
    void set_embedding(HasseEmbedding embedding);

    // Embedding read off from planar coordinates: covers sorted by x, the
    // minimal and maximal elements by x.
    void embed_with_coordinates(const std::vector<std::pair<double, double>>& xy);

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::vector<char> less_;
    std::optional<HasseEmbedding> embedding_;
};

struct LinearExtension {
    std::vector<int> order;

    auto operator<=>(const LinearExtension&) const = default;
    bool operator==(const LinearExtension&) const = default;
};

// Down-set, as a bitmask over element indices (posets of at most 64 elements).
struct OrderIdeal {
    std::uint64_t members = 0;

    bool contains(int x) const { return (members >> x) & 1U; }
    std::vector<int> elements() const;
    auto operator<=>(const OrderIdeal&) const = default;
    bool operator==(const OrderIdeal&) const = default;
};

bool is_linear_extension(const Poset& p, const std::vector<int>& order);

// All linear extensions, lexicographic in element-index order.
std::vector<LinearExtension> linear_extensions(const Poset& p);

// e(P) by dynamic programming over the lattice of order ideals.
Integer count_linear_extensions(const Poset& p);
// e(P) by backtracking over minimal elements.
Integer count_linear_extensions_backtracking(const Poset& p);

// All down-sets, sorted by their sorted element lists.
std::vector<OrderIdeal> order_ideals(const Poset& p);

// Omega(P, m): number of order-preserving maps P -> {1..m}.
Integer order_polynomial(const Poset& p, int m);
// Direct enumeration of all maps; for small posets only.
Integer order_polynomial_bruteforce(const Poset& p, int m);

// All order-preserving maps P -> {0..max_value}, each as a value per element,
// sorted lexicographically.
std::vector<std::vector<int>> order_preserving_maps(const Poset& p, int max_value);

// Cell (row, column) of an n x n matrix, 1-based.
struct Cell {
    int row;
    int col;

    auto operator<=>(const Cell&) const = default;
    bool operator==(const Cell&) const = default;
};

// Partition inside the staircase delta_n = (n-1, ..., 1), occupying the
// cells {(i, j) : i <= len, n - parts[i] + 1 <= j <= n}.
class StaircaseShape {
public:
    StaircaseShape(int n, std::vector<int> parts);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    bool contains(Cell c) const;

    // The partition delta_k = (k-1, ..., 1) inside delta_n.
    static StaircaseShape staircase(int n, int k);
    // Every partition contained in delta_n.
    static std::vector<StaircaseShape> all(int n);

    std::string to_string() const;

private:
    int n_;
    std::vector<int> parts_;
};

// Cells of delta_n \ lambda in row-major order; element k of skew_star(n, lambda)
// is cells[k].
std::vector<Cell> skew_cells(const StaircaseShape& lambda);

// (delta_n \ lambda)^*: p_ij <= p_i'j' iff i >= i' and j <= j'. Carries its
// grid embedding.
Poset skew_star(const StaircaseShape& lambda);
Poset staircase_star(int n);
Poset antichain(int k);
Poset chain(int k);
// k elements with covers alternating up and down: 0 < 1 > 2 < 3 > ...
Poset zigzag(int k);

// binom(n,2)! / (1^{n-1} 3^{n-2} ... (2n-3)^1), the number of standard Young
// tableaux of staircase shape.
Integer staircase_syt_count(int n);

// Isomorphism test by backtracking (small posets only).
bool isomorphic(const Poset& a, const Poset& b);

} // namespace polyflow

#endif
