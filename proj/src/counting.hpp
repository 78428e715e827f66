#pragma once

#include <map>

#include "core.hpp"

namespace permtab {

inline constexpr int kDefaultBruteGuard = 9;

// Number of permutations of 1..n whose longest decreasing subsequence has
// length at most k, by exhaustive sweep.  k >= n short-circuits to n!.
Count xi_brute(int n, int k, int guard = kDefaultBruteGuard,
               int threads = 1);

// The same count as the sum of squared tableau counts over shapes with at
// most k rows.  No guard; polynomially many shapes.
Count xi_shapes(int n, int k);

// Closed form for k = 3: exact rational evaluation, verified integral.
Count xi3_closed(int n);

// Standard tableaux of order n with at most k rows.
Count beth_exact(int n, int k);

// k -> number of permutations with longest decreasing subsequence exactly
// k; factorial-time sweep.
std::map<int, Count> lds_distribution_brute(int n,
                                            int guard = kDefaultBruteGuard,
                                            int threads = 1);

// Same distribution from shape sums: xi_shapes(n, k) - xi_shapes(n, k-1).
std::map<int, Count> lds_distribution_shapes(int n);

}  // namespace permtab
