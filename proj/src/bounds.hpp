#pragma once

#include <string>
#include <vector>

#include "core.hpp"
#include "counting.hpp"
#include "posets.hpp"

namespace permtab {

// k^{2n} / ((k-1)!)^2
Exact xi_bound(int n, int k);

// min{ k^{2n} / (k!)^2, (n-k+1)^{2n} / ((n-k)!)^2 }; requires 1 <= k <= n.
Exact epsilon_bound(int n, int k);

// k^n / (k-1)!
Exact beth_bound(int n, int k);

// C(l,n) * k^{2n} / ((k-1)!)^2; requires 1 <= n <= l.
Exact multilinear_bound(int l, int n, int k);

// C(l,n) * xi_shapes(n, k); requires 1 <= n <= l.
Count multilinear_exact(int l, int n, int k);

struct BoundsRow {
  std::string statistic;
  int n = 0;
  int k = 0;
  Count exact;
  Exact bound;
  Exact ratio;  // exact / bound, in (0, 1] when the theorem holds
  bool pass = false;
  std::string method;     // where the exact value came from
  bool has_at_most = false;  // census rows also report the cumulative count
  Count exact_at_most;
};

struct BoundsReport {
  std::vector<BoundsRow> rows;
  bool all_pass = true;
};

struct VerifyOptions {
  int max_n = 6;
  int max_l = 0;  // corollary sweep; <= 0 means max_n
  int brute_guard = kDefaultBruteGuard;
  int epsilon_guard = kDefaultEpsilonGuard;
  int threads = 1;
};

// Compares every in-range exact statistic against its bound; rows are
// emitted for every (n, k) cell, failing ones included.
BoundsReport verify(const VerifyOptions &options = {});

}  // namespace permtab
