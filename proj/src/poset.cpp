#include "polyflow/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace polyflow {

namespace {

std::uint64_t full_mask(int size) {
    return size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
}

void require_mask_capacity(const Poset& p) {
    if (p.size() > 64) throw InputError("posets with more than 64 elements are not supported here");
}

// Lexicographically first linear extension.
std::vector<int> linear_extensions_first(const Poset& p) {
    const int n = p.size();
    std::vector<int> missing_below(n);
    for (int x = 0; x < n; ++x) missing_below[x] = static_cast<int>(p.lower_covers(x).size());
    std::vector<char> placed(n, 0);
    std::vector<int> order;
    while (static_cast<int>(order.size()) < n) {
        int x = 0;
        while (placed[x] || missing_below[x] != 0) ++x;
        placed[x] = 1;
        order.push_back(x);
        for (int y : p.upper_covers(x)) --missing_below[y];
    }
    return order;
}

// Strict order as an n x n matrix from the edges of a directed graph.
std::vector<char> transitive_closure(int n, const std::vector<std::vector<int>>& up) {
    std::vector<char> less(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        std::vector<int> stack(up[x].begin(), up[x].end());
        while (!stack.empty()) {
            const int y = stack.back();
            stack.pop_back();
            if (less[x * n + y]) continue;
            less[x * n + y] = 1;
            for (int z : up[y]) stack.push_back(z);
        }
    }
    for (int x = 0; x < n; ++x) {
        if (less[x * n + x]) throw InputError("relations contain a cycle");
    }
    return less;
}

bool is_permutation_of(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers,
             std::optional<HasseEmbedding> embedding)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
    const int n = size();
    {
        std::set<std::string> distinct(labels_.begin(), labels_.end());
        if (static_cast<int>(distinct.size()) != n) throw InputError("poset labels must be distinct");
    }
    up_.assign(n, {});
    down_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (const auto& [lo, hi] : covers_) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi) {
            throw InputError("cover relation refers to an invalid element");
        }
        if (!seen.insert({lo, hi}).second) throw InputError("duplicate cover relation");
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
    }
    less_ = transitive_closure(n, up_);
    for (const auto& [lo, hi] : covers_) {
        for (int z = 0; z < n; ++z) {
            if (less(lo, z) && less(z, hi)) {
                throw InputError("cover (" + labels_[lo] + ", " + labels_[hi] +
                                 ") is implied by transitivity");
            }
        }
    }
    if (embedding) set_embedding(std::move(*embedding));
}

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<int, int>>& relations) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> up(n);
    for (const auto& [lo, hi] : relations) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi) {
            throw InputError("relation refers to an invalid element");
        }
        up[lo].push_back(hi);
    }
    const auto less = transitive_closure(n, up);
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!less[x * n + y]) continue;
            bool between = false;
            for (int z = 0; z < n && !between; ++z) between = less[x * n + z] && less[z * n + y];
            if (!between) covers.emplace_back(x, y);
        }
    }
    return Poset(std::move(labels), std::move(covers));
}

int Poset::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InputError("unknown poset element '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        if (down_[x].empty()) out.push_back(x);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        if (up_[x].empty()) out.push_back(x);
    }
    return out;
}

void Poset::set_embedding(HasseEmbedding embedding) {
    const int n = size();
    if (static_cast<int>(embedding.up.size()) != n || static_cast<int>(embedding.down.size()) != n) {
        throw InputError("embedding must list covers for every element");
    }
    for (int x = 0; x < n; ++x) {
        if (!is_permutation_of(embedding.up[x], up_[x]) || !is_permutation_of(embedding.down[x], down_[x])) {
            throw InputError("embedding of element '" + labels_[x] + "' does not match its covers");
        }
    }
    if (!is_permutation_of(embedding.minimal_order, minimal_elements()) ||
        !is_permutation_of(embedding.maximal_order, maximal_elements())) {
        throw InputError("embedding must order exactly the minimal and maximal elements");
    }
    embedding_ = std::move(embedding);
}

void Poset::embed_with_coordinates(const std::vector<std::pair<double, double>>& xy) {
    if (static_cast<int>(xy.size()) != size()) throw ContractError("one coordinate per element");
    auto by_x = [&](std::vector<int> v) {
        std::stable_sort(v.begin(), v.end(), [&](int a, int b) { return xy[a].first < xy[b].first; });
        return v;
    };
    HasseEmbedding e;
    for (int x = 0; x < size(); ++x) {
        e.up.push_back(by_x(up_[x]));
        e.down.push_back(by_x(down_[x]));
    }
    e.minimal_order = by_x(minimal_elements());
    e.maximal_order = by_x(maximal_elements());
    set_embedding(std::move(e));
}

std::vector<int> OrderIdeal::elements() const {
    std::vector<int> out;
    for (int x = 0; x < 64; ++x) {
        if (contains(x)) out.push_back(x);
    }
    return out;
}

bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != p.size()) return false;
    std::vector<int> position(p.size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (order[k] < 0 || order[k] >= p.size() || position[order[k]] >= 0) return false;
        position[order[k]] = static_cast<int>(k);
    }
    return std::all_of(p.covers().begin(), p.covers().end(),
                       [&](const auto& c) { return position[c.first] < position[c.second]; });
}

std::vector<LinearExtension> linear_extensions(const Poset& p) {
    const int n = p.size();
    std::vector<LinearExtension> out;
    std::vector<int> missing_below(n);
    for (int x = 0; x < n; ++x) missing_below[x] = static_cast<int>(p.lower_covers(x).size());
    std::vector<char> placed(n, 0);
    std::vector<int> order;
    std::function<void()> extend = [&]() {
        if (static_cast<int>(order.size()) == n) {
            out.push_back(LinearExtension{order});
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (placed[x] || missing_below[x] != 0) continue;
            placed[x] = 1;
            order.push_back(x);
            for (int y : p.upper_covers(x)) --missing_below[y];
            extend();
            for (int y : p.upper_covers(x)) ++missing_below[y];
            order.pop_back();
            placed[x] = 0;
        }
    };
    extend();
    return out;
}

Integer count_linear_extensions_backtracking(const Poset& p) {
    const int n = p.size();
    std::vector<int> missing_below(n);
    for (int x = 0; x < n; ++x) missing_below[x] = static_cast<int>(p.lower_covers(x).size());
    std::vector<char> placed(n, 0);
    std::uint64_t count = 0;
    std::function<void(int)> extend = [&](int depth) {
        if (depth == n) {
            ++count;
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (placed[x] || missing_below[x] != 0) continue;
            placed[x] = 1;
            for (int y : p.upper_covers(x)) --missing_below[y];
            extend(depth + 1);
            for (int y : p.upper_covers(x)) ++missing_below[y];
            placed[x] = 0;
        }
    };
    extend(0);
    return Integer(std::to_string(count));
}

Integer count_linear_extensions(const Poset& p) {
    require_mask_capacity(p);
    const int n = p.size();
    std::vector<std::uint64_t> below(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y : p.lower_covers(x)) below[x] |= std::uint64_t{1} << y;
    }
    // ways[I] = number of ways to complete ideal I to the full poset.
    std::unordered_map<std::uint64_t, Integer> ways;
    const std::uint64_t full = full_mask(n);
    std::function<Integer(std::uint64_t)> complete = [&](std::uint64_t ideal) -> Integer {
        if (ideal == full) return 1;
        auto it = ways.find(ideal);
        if (it != ways.end()) return it->second;
        Integer total = 0;
        for (int x = 0; x < n; ++x) {
            const std::uint64_t bit = std::uint64_t{1} << x;
            if ((ideal & bit) == 0 && (below[x] & ~ideal) == 0) total += complete(ideal | bit);
        }
        ways.emplace(ideal, total);
        return total;
    };
    return complete(0);
}

std::vector<OrderIdeal> order_ideals(const Poset& p) {
    require_mask_capacity(p);
    const int n = p.size();
    std::vector<int> topo;
    if (n > 0) topo = linear_extensions_first(p);
    std::vector<OrderIdeal> out;
    std::function<void(int, std::uint64_t)> choose = [&](int k, std::uint64_t mask) {
        if (k == n) {
            out.push_back(OrderIdeal{mask});
            return;
        }
        const int x = topo[k];
        choose(k + 1, mask);
        const bool lower_in = std::all_of(p.lower_covers(x).begin(), p.lower_covers(x).end(),
                                          [&](int y) { return (mask >> y) & 1U; });
        if (lower_in) choose(k + 1, mask | (std::uint64_t{1} << x));
    };
    choose(0, 0);
    std::sort(out.begin(), out.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
        return a.elements() < b.elements();
    });
    return out;
}

Integer order_polynomial(const Poset& p, int m) {
    if (m < 0) throw InputError("order polynomial argument must be nonnegative");
    if (m == 0) return p.size() == 0 ? 1 : 0;
    const auto ideals = order_ideals(p);
    const std::size_t count = ideals.size();
    // chains[J] = number of multichains I_1 <= ... <= I_k = J.
    std::vector<Integer> chains(count, 1);
    for (int step = 2; step <= m; ++step) {
        std::vector<Integer> next(count, 0);
        for (std::size_t j = 0; j < count; ++j) {
            for (std::size_t i = 0; i < count; ++i) {
                if ((ideals[i].members & ~ideals[j].members) == 0) next[j] += chains[i];
            }
        }
        chains = std::move(next);
    }
    // The full poset is the last ideal in sorted order only by accident; look it up.
    const std::uint64_t full = full_mask(p.size());
    for (std::size_t j = 0; j < count; ++j) {
        if (ideals[j].members == full) return chains[j];
    }
    throw InternalError("full ideal missing from ideal lattice");
}

Integer order_polynomial_bruteforce(const Poset& p, int m) {
    if (m < 0) throw InputError("order polynomial argument must be nonnegative");
    const int n = p.size();
    if (n == 0) return 1;
    if (m == 0) return 0;
    std::vector<int> value(n, 1);
    std::uint64_t count = 0;
    while (true) {
        bool ok = std::all_of(p.covers().begin(), p.covers().end(),
                              [&](const auto& c) { return value[c.first] <= value[c.second]; });
        if (ok) ++count;
        int k = 0;
        while (k < n && value[k] == m) value[k++] = 1;
        if (k == n) break;
        ++value[k];
    }
    return Integer(std::to_string(count));
}

std::vector<std::vector<int>> order_preserving_maps(const Poset& p, int max_value) {
    const int n = p.size();
    std::vector<std::vector<int>> out;
    if (max_value < 0) return out;
    std::vector<int> topo = n > 0 ? linear_extensions_first(p) : std::vector<int>{};
    std::vector<int> value(n, 0);
    std::function<void(int)> assign = [&](int k) {
        if (k == n) {
            out.push_back(value);
            return;
        }
        const int x = topo[k];
        int lo = 0;
        for (int y : p.lower_covers(x)) lo = std::max(lo, value[y]);
        for (int v = lo; v <= max_value; ++v) {
            value[x] = v;
            assign(k + 1);
        }
        value[x] = 0;
    };
    assign(0);
    std::sort(out.begin(), out.end());
    return out;
}

StaircaseShape::StaircaseShape(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
    if (n < 1) throw InputError("staircase size must be positive");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (static_cast<int>(parts_.size()) > n - 1) {
        throw InputError("partition " + to_string() + " has too many parts for delta_" + std::to_string(n));
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InputError("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
        if (parts_[i] > n - static_cast<int>(i) - 1) {
            throw InputError("partition " + to_string() + " is not contained in delta_" + std::to_string(n));
        }
    }
}

int StaircaseShape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool StaircaseShape::contains(Cell c) const {
    if (c.row < 1 || c.row > static_cast<int>(parts_.size()) || c.col > n_) return false;
    return c.col >= n_ - parts_[c.row - 1] + 1;
}

StaircaseShape StaircaseShape::staircase(int n, int k) {
    std::vector<int> parts;
    for (int part = k - 1; part >= 1; --part) parts.push_back(part);
    return StaircaseShape(n, std::move(parts));
}

std::vector<StaircaseShape> StaircaseShape::all(int n) {
    std::vector<StaircaseShape> out;
    std::vector<int> parts;
    std::function<void(int, int)> grow = [&](int row, int bound) {
        out.emplace_back(n, parts);
        if (row > n - 1) return;
        const int limit = std::min(bound, n - row);
        for (int part = 1; part <= limit; ++part) {
            parts.push_back(part);
            grow(row + 1, part);
            parts.pop_back();
        }
    };
    grow(1, n);
    return out;
}

std::string StaircaseShape::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Cell> skew_cells(const StaircaseShape& lambda) {
    std::vector<Cell> cells;
    const int n = lambda.n();
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!lambda.contains({i, j})) cells.push_back({i, j});
        }
    }
    return cells;
}

Poset skew_star(const StaircaseShape& lambda) {
    const auto cells = skew_cells(lambda);
    const int m = static_cast<int>(cells.size());
    std::vector<std::string> labels;
    std::vector<std::pair<double, double>> xy;
    for (const Cell& c : cells) {
        labels.push_back("p" + std::to_string(c.row) + "," + std::to_string(c.col));
        xy.emplace_back(c.row + c.col, c.col - c.row);
    }
    std::vector<std::pair<int, int>> relations;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a != b && cells[a].row >= cells[b].row && cells[a].col <= cells[b].col) relations.emplace_back(a, b);
        }
    }
    Poset p = Poset::from_relations(std::move(labels), relations);
    p.embed_with_coordinates(xy);
    return p;
}

Poset staircase_star(int n) { return skew_star(StaircaseShape(n, {})); }

namespace {

Poset labelled_poset(char prefix, int k, std::vector<std::pair<int, int>> covers,
                     const std::function<std::pair<double, double>(int)>& place) {
    if (k < 0) throw InputError("poset size must be nonnegative");
    std::vector<std::string> labels;
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < k; ++i) {
        labels.push_back(std::string(1, prefix) + std::to_string(i));
        xy.push_back(place(i));
    }
    Poset p(std::move(labels), std::move(covers));
    p.embed_with_coordinates(xy);
    return p;
}

} // namespace

Poset antichain(int k) {
    return labelled_poset('a', k, {}, [](int i) { return std::pair<double, double>(i, 0); });
}

Poset chain(int k) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return labelled_poset('c', k, std::move(covers), [](int i) { return std::pair<double, double>(0, i); });
}

Poset zigzag(int k) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) {
        if (i % 2 == 0) covers.emplace_back(i, i + 1);
        else covers.emplace_back(i + 1, i);
    }
    return labelled_poset('z', k, std::move(covers), [](int i) { return std::pair<double, double>(i, i % 2); });
}

Integer staircase_syt_count(int n) {
    if (n < 1) throw InputError("staircase size must be positive");
    Integer numerator = factorial(n * (n - 1) / 2);
    Integer denominator = 1;
    for (int k = 1; k < n; ++k) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), 2 * k - 1, n - k);
        denominator *= power;
    }
    if (numerator % denominator != 0) throw InternalError("staircase tableau count is not integral");
    return numerator / denominator;
}

bool isomorphic(const Poset& a, const Poset& b) {
    const int n = a.size();
    if (n != b.size() || a.covers().size() != b.covers().size()) return false;
    auto signature = [](const Poset& p, int x) {
        return std::pair<std::size_t, std::size_t>(p.lower_covers(x).size(), p.upper_covers(x).size());
    };
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> assign = [&](int x) -> bool {
        if (x == n) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y] || signature(a, x) != signature(b, y)) continue;
            bool consistent = true;
            for (int z = 0; z < x && consistent; ++z) {
                consistent = a.less(z, x) == b.less(image[z], y) && a.less(x, z) == b.less(y, image[z]);
            }
            if (!consistent) continue;
            image[x] = y;
            used[y] = 1;
            if (assign(x + 1)) return true;
            used[y] = 0;
            image[x] = -1;
        }
        return false;
    };
    return assign(0);
}

} // namespace polyflow
