#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pda {

// Exact ceiling of a/b for nonnegative a, positive b.
long long ceil_div(long long a, long long b);

long long binomial(int n, int r);

// r-subsets of {1..n} in lexicographic order ("top-bottom").
std::vector<std::vector<int>> combinations_tb(int n, int r);
// The same subsets enumerated from the reversed ground set, i.e. the exact
// reverse of the TB sequence.
std::vector<std::vector<int>> combinations_bt(int n, int r);

// 1-based rank of a sorted r-subset of {1..n} in TB order, and its inverse.
long long tb_rank(std::span<const int> subset, int n);
std::vector<int> tb_unrank(long long rank, int n, int r);

long long bt_rank(std::span<const int> subset, int n);
std::vector<int> bt_unrank(long long rank, int n, int r);

}  // namespace pda
