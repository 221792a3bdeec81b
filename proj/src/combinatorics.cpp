#include "pda/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace pda {

long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    if (a < 0) throw std::invalid_argument("ceil_div: negative dividend");
    return (a + b - 1) / b;
}

long long binomial(int n, int r) {
    if (r < 0 || n < 0) throw std::invalid_argument("binomial: negative argument");
    if (r > n) return 0;
    r = std::min(r, n - r);
    long long result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;  // exact: product of i consecutive ints
    }
    return result;
}

std::vector<std::vector<int>> combinations_tb(int n, int r) {
    if (r < 0 || n < 0 || r > n)
        throw std::invalid_argument("combinations_tb: need 0 <= r <= n");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<size_t>(binomial(n, r)));
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> combinations_bt(int n, int r) {
    auto out = combinations_tb(n, r);
    std::reverse(out.begin(), out.end());
    return out;
}

long long tb_rank(std::span<const int> subset, int n) {
    const int r = static_cast<int>(subset.size());
    for (int i = 0; i < r; ++i) {
        if (subset[i] < 1 || subset[i] > n || (i > 0 && subset[i] <= subset[i - 1]))
            throw std::invalid_argument("tb_rank: not a sorted subset of {1..n}");
    }
    // count subsets strictly before
    long long before = 0;
    int prev = 0;
    for (int i = 0; i < r; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            before += binomial(n - v, r - 1 - i);
        prev = subset[i];
    }
    return before + 1;
}

std::vector<int> tb_unrank(long long rank, int n, int r) {
    if (rank < 1 || rank > binomial(n, r))
        throw std::invalid_argument("tb_unrank: rank out of range");
    std::vector<int> out(r);
    long long before = rank - 1;
    int prev = 0;
    for (int i = 0; i < r; ++i) {
        int v = prev + 1;
        while (true) {
            long long block = binomial(n - v, r - 1 - i);
            if (before < block) break;
            before -= block;
            ++v;
        }
        out[i] = v;
        prev = v;
    }
    return out;
}

long long bt_rank(std::span<const int> subset, int n) {
    const int r = static_cast<int>(subset.size());
    return binomial(n, r) + 1 - tb_rank(subset, n);
}

std::vector<int> bt_unrank(long long rank, int n, int r) {
    return tb_unrank(binomial(n, r) + 1 - rank, n, r);
}

}  // namespace pda
