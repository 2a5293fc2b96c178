#include "polyflow/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace polyflow {

namespace {

// Fraction-free forward elimination; returns the pivot columns in order and
// leaves the last pivot (a maximal minor up to sign) in `last_pivot`.
std::vector<int> bareiss_eliminate(IntegerMatrix& m, int& swaps) {
    std::vector<int> pivots;
    swaps = 0;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    Integer previous = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = rank;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        if (p != rank) {
            std::swap(m[p], m[rank]);
            ++swaps;
        }
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / previous;
            }
            m[i][col] = 0;
        }
        previous = m[rank][col];
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

IntegerMatrix differences(const std::vector<IntegerPoint>& points) {
    IntegerMatrix rows;
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (points[k].size() != points[0].size()) throw ContractError("points of different dimensions");
        IntegerPoint d(points[k].size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = points[k][i] - points[0][i];
        rows.push_back(std::move(d));
    }
    return rows;
}

IntegerMatrix restrict_columns(const IntegerMatrix& m, const std::vector<int>& cols) {
    IntegerMatrix out;
    for (const auto& row : m) {
        std::vector<Integer> r;
        for (int c : cols) r.push_back(row[c]);
        out.push_back(std::move(r));
    }
    return out;
}

// Inverse of a square rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw ContractError("singular matrix");
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        const Rational pivot = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= pivot;
            inv[col][j] /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= factor * a[col][j];
                inv[i][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

// Barycentric test for one simplex, in the pivot coordinates of the hull.
struct SimplexSolver {
    std::vector<Rational> base;
    std::vector<std::vector<Rational>> inv;

    bool contains(const std::vector<Rational>& x) const {
        const std::size_t d = base.size();
        Rational rest = 1;
        for (std::size_t i = 0; i < d; ++i) {
            Rational lambda = 0;
            for (std::size_t j = 0; j < d; ++j) lambda += inv[i][j] * (x[j] - base[j]);
            if (lambda < 0) return false;
            rest -= lambda;
        }
        return rest >= 0;
    }
};

} // namespace

int integer_rank(IntegerMatrix rows) {
    int swaps = 0;
    return static_cast<int>(bareiss_eliminate(rows, swaps).size());
}

Integer integer_determinant(IntegerMatrix rows) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    for (const auto& r : rows) {
        if (r.size() != n) throw ContractError("determinant of a non-square matrix");
    }
    int swaps = 0;
    if (bareiss_eliminate(rows, swaps).size() != n) return 0;
    return swaps % 2 == 0 ? Integer(rows[n - 1][n - 1]) : Integer(-rows[n - 1][n - 1]);
}

IntegerMatrix integer_kernel(const IntegerMatrix& a_in, int cols) {
    IntegerMatrix a = a_in;
    // Column operations on A, mirrored on U = identity, bring A to column echelon form.
    IntegerMatrix u(cols, std::vector<Integer>(cols, 0));
    for (int i = 0; i < cols; ++i) u[i][i] = 1;
    auto combine = [&](IntegerMatrix& m, int p, int j, const Integer& s, const Integer& t, const Integer& x,
                       const Integer& y) {
        // col p <- s col p + t col j ; col j <- x col p + y col j
        for (auto& row : m) {
            const Integer cp = row[p];
            const Integer cj = row[j];
            row[p] = s * cp + t * cj;
            row[j] = x * cp + y * cj;
        }
    };
    int pivot = 0;
    for (std::size_t i = 0; i < a.size() && pivot < cols; ++i) {
        for (int j = pivot + 1; j < cols; ++j) {
            if (a[i][j] == 0) continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[i][pivot].get_mpz_t(), a[i][j].get_mpz_t());
            const Integer x = -a[i][j] / g;
            const Integer y = a[i][pivot] / g;
            combine(a, pivot, j, s, t, x, y);
            combine(u, pivot, j, s, t, x, y);
        }
        if (a[i][pivot] != 0) ++pivot;
    }
    IntegerMatrix kernel;
    for (int j = pivot; j < cols; ++j) {
        std::vector<Integer> v(cols);
        for (int i = 0; i < cols; ++i) v[i] = u[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

int affine_dimension(const std::vector<IntegerPoint>& points) {
    if (points.empty()) throw ContractError("affine_dimension of an empty point set");
    return integer_rank(differences(points));
}

int affine_dimension(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw ContractError("affine_dimension of an empty point set");
    IntegerMatrix rows;
    for (std::size_t k = 1; k < points.size(); ++k) {
        Integer scale = 1;
        for (std::size_t i = 0; i < points[k].size(); ++i) {
            const Rational d = points[k][i] - points[0][i];
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_den_mpz_t());
        }
        std::vector<Integer> row;
        for (std::size_t i = 0; i < points[k].size(); ++i) {
            const Rational d = (points[k][i] - points[0][i]) * scale;
            row.push_back(d.get_num());
        }
        rows.push_back(std::move(row));
    }
    return integer_rank(std::move(rows));
}

AffineLattice::AffineLattice(const std::vector<IntegerPoint>& points) {
    if (points.empty()) throw ContractError("AffineLattice needs at least one point");
    ambient_ = static_cast<int>(points[0].size());
    const IntegerMatrix d = differences(points);
    const int rank = integer_rank(d);
    if (rank > 0) {
        // span(D) = (ker D)^perp, so its integer points form the kernel of a kernel basis.
        const IntegerMatrix normals = integer_kernel(d, ambient_);
        if (normals.empty()) {
            for (int i = 0; i < ambient_; ++i) {
                basis_.emplace_back(ambient_, 0);
                basis_.back()[i] = 1;
            }
        } else {
            basis_ = integer_kernel(normals, ambient_);
        }
    }
    if (static_cast<int>(basis_.size()) != rank) throw InternalError("lattice basis has the wrong rank");
    IntegerMatrix echelon = basis_;
    int swaps = 0;
    pivots_ = bareiss_eliminate(echelon, swaps);
    pivot_det_ = integer_determinant(restrict_columns(basis_, pivots_));
}

Integer AffineLattice::normalized_volume(const std::vector<IntegerPoint>& simplex) const {
    if (static_cast<int>(simplex.size()) != dimension() + 1) return 0;
    const Integer det = integer_determinant(restrict_columns(differences(simplex), pivots_));
    if (det % pivot_det_ != 0) throw ContractError("simplex does not lie in the lattice");
    return abs(det / pivot_det_);
}

std::vector<IntegerPoint> LatticeSimplex::key() const {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

Integer simplex_normalized_volume(const LatticeSimplex& s, const AffineLattice& lattice) {
    return lattice.normalized_volume(s.vertices);
}

TriangulationReport triangulation_checks(const std::vector<IntegerPoint>& polytope_vertices,
                                         const std::vector<LatticeSimplex>& simplices,
                                         const Integer& expected_volume, int samples, std::uint64_t seed,
                                         Execution execution) {
    TriangulationReport report;
    report.simplex_count = simplices.size();
    auto fail = [&](std::string message) {
        report.ok = false;
        report.failures.push_back(std::move(message));
    };
    if (polytope_vertices.empty() || simplices.empty()) {
        fail("empty polytope or triangulation");
        return report;
    }
    const AffineLattice lattice(polytope_vertices);
    report.dimension = lattice.dimension();
    const std::set<IntegerPoint> vertex_set(polytope_vertices.begin(), polytope_vertices.end());

    for (std::size_t k = 0; k < simplices.size(); ++k) {
        const auto& s = simplices[k];
        for (const auto& v : s.vertices) {
            if (!vertex_set.contains(v)) {
                fail("simplex " + std::to_string(k) + " has a vertex outside the polytope's vertex set");
                break;
            }
        }
        Integer volume = 0;
        try {
            volume = lattice.normalized_volume(s.vertices);
        } catch (const ContractError&) {
            fail("simplex " + std::to_string(k) + " leaves the affine hull");
        }
        if (volume != 1) fail("simplex " + std::to_string(k) + " has normalized volume " + volume.get_str());
        report.volume_sum += volume;
    }
    if (report.volume_sum != expected_volume) {
        fail("volumes sum to " + report.volume_sum.get_str() + ", expected " + expected_volume.get_str());
    }
    if (!report.ok) return report;

    const auto& pivots = lattice.pivot_columns();
    const std::size_t d = pivots.size();
    std::vector<SimplexSolver> solvers;
    for (const auto& s : simplices) {
        SimplexSolver solver;
        for (int c : pivots) solver.base.emplace_back(s.vertices[0][c]);
        std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
        for (std::size_t k = 1; k <= d; ++k) {
            for (std::size_t i = 0; i < d; ++i) m[i][k - 1] = Rational(s.vertices[k][pivots[i]]) - solver.base[i];
        }
        solver.inv = inverse(std::move(m));
        solvers.push_back(std::move(solver));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, simplices.size() - 1);
    std::uniform_int_distribution<int> weight(1, 1000);
    std::vector<std::vector<Rational>> points;
    for (int k = 0; k < samples; ++k) {
        const auto& s = simplices[pick(rng)];
        std::vector<Rational> x(d, 0);
        Rational total = 0;
        for (const auto& v : s.vertices) {
            const int w = weight(rng);
            total += w;
            for (std::size_t i = 0; i < d; ++i) x[i] += Rational(v[pivots[i]]) * w;
        }
        for (auto& c : x) c /= total;
        points.push_back(std::move(x));
    }

    std::vector<int> hits(points.size(), 0);
    const auto count = static_cast<std::int64_t>(points.size());
    auto membership = [&](std::int64_t k) {
        int c = 0;
        for (const auto& solver : solvers) c += solver.contains(points[k]) ? 1 : 0;
        hits[k] = c;
    };
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < count; ++k) membership(k);
    } else {
        for (std::int64_t k = 0; k < count; ++k) membership(k);
    }
    report.samples_checked = samples;
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (hits[k] != 1) fail("sample " + std::to_string(k) + " lies in " + std::to_string(hits[k]) + " simplices");
    }
    return report;
}

} // namespace polyflow
