#ifndef POLYFLOW_LATTICE_HPP
#define POLYFLOW_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyflow/common.hpp"

namespace polyflow {

using IntegerPoint = std::vector<Integer>;
using RationalPoint = std::vector<Rational>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

// Rank by fraction-free (Bareiss) elimination.
int integer_rank(IntegerMatrix rows);
// Determinant of a square matrix by Bareiss elimination.
Integer integer_determinant(IntegerMatrix rows);
// Lattice basis (rows) of {x in Z^cols : A x = 0}.
IntegerMatrix integer_kernel(const IntegerMatrix& a, int cols);

// Dimension of the affine hull.
int affine_dimension(const std::vector<IntegerPoint>& points);
int affine_dimension(const std::vector<RationalPoint>& points);

// The lattice of integer points in the linear span of the differences of a
// point set: span(differences) intersected with Z^N.
class AffineLattice {
public:
    explicit AffineLattice(const std::vector<IntegerPoint>& points);

    int dimension() const { return static_cast<int>(basis_.size()); }
    int ambient_dimension() const { return ambient_; }
    const IntegerMatrix& basis() const { return basis_; }
    // Coordinates on which the projection of the affine hull is injective.
    const std::vector<int>& pivot_columns() const { return pivots_; }

    // |det| of the differences v_k - v_0 written in the lattice basis; 0 for
    // degenerate simplices or vertex counts other than dimension + 1.
    Integer normalized_volume(const std::vector<IntegerPoint>& simplex) const;

private:
    int ambient_ = 0;
    IntegerMatrix basis_;
    std::vector<int> pivots_;
    Integer pivot_det_;
};

struct LatticeSimplex {
    std::vector<IntegerPoint> vertices;

    // Sorted vertex list; equal keys mean equal simplices.
    std::vector<IntegerPoint> key() const;
};

Integer simplex_normalized_volume(const LatticeSimplex& s, const AffineLattice& lattice);

enum class Execution { parallel, serial };

struct TriangulationReport {
    bool ok = true;
    int dimension = 0;
    std::size_t simplex_count = 0;
    Integer volume_sum = 0;
    int samples_checked = 0;
    std::vector<std::string> failures;
};

inline constexpr std::uint64_t kSampleSeed = 0xA5C;

// Checks that every simplex uses polytope vertices, is full-dimensional of
// normalized volume 1, that the volumes add up to `expected_volume`, and that
// each of `samples` random interior points of random simplices lies in
// exactly one simplex.
TriangulationReport triangulation_checks(const std::vector<IntegerPoint>& polytope_vertices,
                                         const std::vector<LatticeSimplex>& simplices,
                                         const Integer& expected_volume, int samples = 200,
                                         std::uint64_t seed = kSampleSeed,
                                         Execution execution = Execution::parallel);

} // namespace polyflow

#endif
