#include "polyflow/asm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "polyflow/kostant.hpp"
#include "polyflow/planar.hpp"
#include "polyflow/triangulations.hpp"

namespace polyflow {

bool is_alternating_sign_matrix(const ASMatrix& m) {
    const int n = m.n;
    if (static_cast<int>(m.entries.size()) != n * n) return false;
    for (int i = 1; i <= n; ++i) {
        int row = 0;
        int col = 0;
        for (int j = 1; j <= n; ++j) {
            row += m.at(i, j);
            col += m.at(j, i);
            if (row < 0 || row > 1 || col < 0 || col > 1) return false;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

namespace {

// Rows with entries in [-t, t] whose partial sums stay in [0, t], total t,
// and that keep the column partial sums `cols` in [0, t].
template <class Visit>
void for_each_row(int n, int t, const std::vector<int>& cols, const std::function<bool(int)>& zero, Visit&& visit) {
    std::vector<int> row(n, 0);
    std::function<void(int, int)> fill = [&](int j, int partial) {
        if (j == n) {
            if (partial == t) visit(row);
            return;
        }
        for (int a = -t; a <= t; ++a) {
            if (a != 0 && zero(j + 1)) continue;
            const int p = partial + a;
            const int c = cols[j] + a;
            if (p < 0 || p > t || c < 0 || c > t) continue;
            row[j] = a;
            fill(j + 1, p);
        }
        row[j] = 0;
    };
    fill(0, 0);
}

} // namespace

std::vector<ASMatrix> enumerate_asm(int n) {
    if (n < 1) throw InputError("matrix size must be positive");
    std::vector<ASMatrix> out;
    std::vector<int> entries;
    std::function<void(int, std::vector<int>&)> rows = [&](int i, std::vector<int>& cols) {
        if (i == n) {
            out.push_back(ASMatrix{n, entries});
            return;
        }
        for_each_row(n, 1, cols, [](int) { return false; }, [&](const std::vector<int>& row) {
            for (int j = 0; j < n; ++j) cols[j] += row[j];
            entries.insert(entries.end(), row.begin(), row.end());
            // Column sums must reach 1 by the last row.
            const bool last_ok = i + 1 < n || std::all_of(cols.begin(), cols.end(), [](int c) { return c == 1; });
            if (last_ok) rows(i + 1, cols);
            entries.resize(entries.size() - n);
            for (int j = 0; j < n; ++j) cols[j] -= row[j];
        });
    };
    std::vector<int> cols(n, 0);
    rows(0, cols);
    std::sort(out.begin(), out.end());
    return out;
}

bool forced_zero(const StaircaseShape& lambda, int i, int j) {
    return i - j >= 2 || lambda.contains({i, j});
}

std::vector<ASMatrix> p_lambda_vertices(const StaircaseShape& lambda) {
    std::vector<ASMatrix> out;
    for (auto& m : enumerate_asm(lambda.n())) {
        bool ok = true;
        for (int i = 1; i <= m.n && ok; ++i) {
            for (int j = 1; j <= m.n && ok; ++j) ok = m.at(i, j) == 0 || !forced_zero(lambda, i, j);
        }
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

IntegerPoint flatten(const ASMatrix& m) {
    return IntegerPoint(m.entries.begin(), m.entries.end());
}

std::vector<Rational> corner_sum_map(const StaircaseShape& lambda, const std::vector<std::vector<Rational>>& m) {
    const int n = lambda.n();
    if (static_cast<int>(m.size()) != n) throw InputError("matrix must be n x n");
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw InputError("matrix must be n x n");
    }
    auto at = [&](int i, int j) -> const Rational& { return m[i - 1][j - 1]; };
    for (int i = 1; i <= n; ++i) {
        Rational row = 0;
        Rational col = 0;
        for (int j = 1; j <= n; ++j) {
            if (forced_zero(lambda, i, j) && at(i, j) != 0) {
                throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be zero");
            }
            row += at(i, j);
            col += at(j, i);
            if (row < 0 || row > 1 || col < 0 || col > 1) throw InputError("partial sums must lie in [0, 1]");
        }
        if (row != 1 || col != 1) throw InputError("row and column sums must be 1");
    }

    const auto cells = skew_cells(lambda);
    std::vector<Rational> g;
    for (const Cell& c : cells) {
        Rational corner = 0;
        for (int i = 1; i <= c.row; ++i) {
            for (int j = c.col; j <= n; ++j) corner += at(i, j);
        }
        g.push_back(1 - corner);
    }
    const Poset p = skew_star(lambda);
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (g[x] < 0 || g[x] > 1) throw InternalError("corner-sum value outside [0, 1]");
    }
    for (const auto& [lo, hi] : p.covers()) {
        if (g[lo] > g[hi]) throw InternalError("corner-sum map is not order preserving");
    }
    return g;
}

std::vector<Rational> corner_sum_map(const StaircaseShape& lambda, const ASMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.n, std::vector<Rational>(m.n));
    for (int i = 1; i <= m.n; ++i) {
        for (int j = 1; j <= m.n; ++j) rows[i - 1][j - 1] = m.at(i, j);
    }
    return corner_sum_map(lambda, rows);
}

Integer asm_dilation_count(const StaircaseShape& lambda, int t) {
    if (t < 0) throw InputError("dilation factor must be nonnegative");
    const int n = lambda.n();
    // Column partial sums after each row -> number of ways.
    std::map<std::vector<int>, Integer> states{{std::vector<int>(n, 0), 1}};
    for (int i = 1; i <= n; ++i) {
        std::map<std::vector<int>, Integer> next;
        for (const auto& [cols, ways] : states) {
            for_each_row(n, t, cols, [&](int j) { return forced_zero(lambda, i, j); },
                         [&](const std::vector<int>& row) {
                             std::vector<int> c = cols;
                             for (int j = 0; j < n; ++j) c[j] += row[j];
                             next[c] += ways;
                         });
        }
        states = std::move(next);
    }
    auto it = states.find(std::vector<int>(n, t));
    return it == states.end() ? Integer(0) : it->second;
}

Integer proctor_ehrhart(int n, int t) {
    if (n < 1 || t < 0) throw InputError("proctor_ehrhart needs n >= 1 and t >= 0");
    Rational value = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) value *= Rational(2 * t + i + j - 1, i + j - 1);
    }
    value.canonicalize();
    if (value.get_den() != 1) throw InternalError("product formula is not an integer");
    return value.get_num();
}

Integer bounded_dyck_paths(int n, int max_height) {
    if (n < 0 || max_height < 0) throw InputError("Dyck path parameters must be nonnegative");
    std::vector<Integer> ways(max_height + 1, 0);
    ways[0] = 1;
    for (int step = 0; step < 2 * n; ++step) {
        std::vector<Integer> next(max_height + 1, 0);
        for (int h = 0; h <= max_height; ++h) {
            if (ways[h] == 0) continue;
            if (h + 1 <= max_height) next[h + 1] += ways[h];
            if (h > 0) next[h - 1] += ways[h];
        }
        ways = std::move(next);
    }
    return ways[0];
}

Integer alternating_permutations(int n) {
    if (n < 0) throw InputError("n must be nonnegative");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int k = 0; k + 1 < n && ok; ++k) ok = (k % 2 == 0) ? perm[k] < perm[k + 1] : perm[k] > perm[k + 1];
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Integer(std::to_string(count));
}

FamilyReport family_report(const StaircaseShape& lambda, int max_t) {
    const int n = lambda.n();
    FamilyReport r;
    r.n = n;
    r.lambda = lambda.to_string();
    const auto vertices = p_lambda_vertices(lambda);
    r.vertex_count = vertices.size();
    std::vector<IntegerPoint> points;
    for (const auto& m : vertices) points.push_back(flatten(m));
    r.dimension = affine_dimension(points);
    r.expected_dimension = n * (n - 1) / 2 - lambda.size();

    const Poset p = skew_star(lambda);
    r.order_ideal_count = order_ideals(p).size();
    const PlanarGraphData pg = poset_to_flow_graph(p);
    r.volume_by_extensions = count_linear_extensions(p);
    r.volume_by_kostant = flow_polytope_volume(pg.graph);
    r.volume_by_dkk = static_cast<unsigned long>(dkk_maximal_cliques(pg.graph, pg.framing).size());

    bool consistent = r.dimension == r.expected_dimension && r.vertex_count == r.order_ideal_count &&
                      r.volume_by_extensions == r.volume_by_kostant && r.volume_by_kostant == r.volume_by_dkk;
    for (int t = 0; t <= max_t; ++t) {
        EhrhartRow row{t, asm_dilation_count(lambda, t), order_polynomial(p, t + 1), flow_ehrhart_value(pg.graph, t)};
        consistent = consistent && row.asm_count == row.order_count && row.order_count == row.flow_count;
        if (lambda.size() == 0) consistent = consistent && row.asm_count == proctor_ehrhart(n, t);
        r.ehrhart.push_back(std::move(row));
    }
    r.all_consistent = consistent;
    return r;
}

} // namespace polyflow
