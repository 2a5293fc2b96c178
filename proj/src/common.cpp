#include "polyflow/common.hpp"

#include <algorithm>

namespace polyflow {

namespace {

void fill_compositions(int remaining, int part, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
    if (part + 1 == static_cast<int>(current.size())) {
        current[part] = remaining;
        out.push_back(current);
        return;
    }
    for (int value = 0; value <= remaining; ++value) {
        current[part] = value;
        fill_compositions(remaining - value, part + 1, current, out);
    }
}

} // namespace

std::vector<std::vector<int>> weak_compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (total < 0 || parts < 0) return out;
    if (parts == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current(parts, 0);
    fill_compositions(total, 0, current, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

Integer factorial(unsigned n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(unsigned n, unsigned k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Integer catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

} // namespace polyflow
