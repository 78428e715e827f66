#pragma once

#include "core.hpp"

namespace permtab {

inline constexpr int kDefaultEnumerationGuard = 12;

struct LdsResult {
  int length = 0;
  // 1-based positions i_1 < ... < i_k with strictly decreasing values;
  // the lexicographically least such index sequence of maximum length.
  std::vector<int> witness;
};

// Longest strictly decreasing subsequence.  A patience-style O(n log n)
// pass computes the length; a quadratic dynamic program reconstructs the
// witness and cross-checks it.
LdsResult lds(const Permutation &perm);

// True iff the word contains a decreasing subsequence of length k.
bool is_k_divisible(const Permutation &perm, int k);

// Hook length of every cell, row-major: arm + leg + 1.
std::vector<int> hook_lengths(const Partition &shape);

// n! / prod(hooks); the division is always exact.
Count syt_count_hook(const Partition &shape);

// Every standard tableau of the shape, by backtracking placement of 1..n,
// in a fixed deterministic order.
std::vector<StandardTableau> syt_enumerate(
    const Partition &shape, int guard = kDefaultEnumerationGuard);

// (2n)! / (n! (n+1)!).
Count catalan(int n);

}  // namespace permtab
