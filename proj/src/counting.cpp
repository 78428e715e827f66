#include "counting.hpp"

#include <algorithm>

#include "sn_sweep.hpp"
#include "stats.hpp"

namespace permtab {

namespace {

void check_brute_guard(int n, int guard) {
  if (n > guard) {
    fail(ErrorKind::GuardExceeded,
         "sweep over S_" + std::to_string(n) + " exceeds the guard of " +
             std::to_string(guard));
  }
}

// Longest strictly decreasing subsequence length, tails-only (the witness
// machinery in lds() is not needed in the hot sweep).
int lds_length(const std::vector<int> &word) {
  std::vector<int> tails;
  for (int value : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), -value);
    if (it == tails.end()) {
      tails.push_back(-value);
    } else {
      *it = -value;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace

Count xi_brute(int n, int k, int guard, int threads) {
  if (n < 1 || k < 1) fail(ErrorKind::OutOfRange, "requires n, k >= 1");
  if (k >= n) return factorial(n);  // no word has a longer decreasing run
  check_brute_guard(n, guard);
  std::vector<long> per_block(n, 0);
  run_blocks(n, threads, [&](int block) {
    long count = 0;
    for_each_permutation_with_first(n, block + 1, [&](const auto &word) {
      if (lds_length(word) <= k) ++count;
    });
    per_block[block] = count;
  });
  Count total = 0;
  for (long c : per_block) total += c;
  return total;
}

Count xi_shapes(int n, int k) {
  if (n < 1 || k < 1) fail(ErrorKind::OutOfRange, "requires n, k >= 1");
  Count total = 0;
  for (const Partition &shape : partitions(n, std::min(n, k))) {
    const Count f = syt_count_hook(shape);
    total += f * f;
  }
  return total;
}

Count xi3_closed(int n) {
  if (n < 1) fail(ErrorKind::OutOfRange, "requires n >= 1");
  // 2 * sum_j C(2j,j) C(n,j)^2 (3j^2+2j+1-n-2jn) / ((j+1)^2 (j+2) (n-j+1));
  // individual terms are not integers, so the sum runs over exact
  // rationals and is checked integral at the end.
  Exact total = 0;
  for (int j = 0; j <= n; ++j) {
    const Count cj = binomial(2 * j, j);
    const Count nj = binomial(n, j);
    Count numerator = cj * nj * nj;
    numerator *= Count(3) * j * j + 2 * j + 1 - n - Count(2) * j * n;
    Count denominator = Count(j + 1) * (j + 1) * (j + 2) * (n - j + 1);
    total += make_exact(numerator, denominator);
  }
  total *= 2;
  if (total.get_den() != 1 || total.get_num() < 0) {
    fail(ErrorKind::NonIntegerResult,
         "closed-form sum did not reduce to a nonnegative integer");
  }
  return total.get_num();
}

Count beth_exact(int n, int k) {
  if (n < 1 || k < 1) fail(ErrorKind::OutOfRange, "requires n, k >= 1");
  Count total = 0;
  for (const Partition &shape : partitions(n, std::min(n, k))) {
    total += syt_count_hook(shape);
  }
  return total;
}

std::map<int, Count> lds_distribution_brute(int n, int guard, int threads) {
  if (n < 1) fail(ErrorKind::OutOfRange, "requires n >= 1");
  check_brute_guard(n, guard);
  std::vector<std::vector<long>> per_block(n, std::vector<long>(n + 1, 0));
  run_blocks(n, threads, [&](int block) {
    auto &tally = per_block[block];
    for_each_permutation_with_first(n, block + 1, [&](const auto &word) {
      ++tally[lds_length(word)];
    });
  });
  std::map<int, Count> distribution;
  for (int k = 1; k <= n; ++k) {
    Count total = 0;
    for (int block = 0; block < n; ++block) total += per_block[block][k];
    if (total != 0) distribution[k] = total;
  }
  return distribution;
}

std::map<int, Count> lds_distribution_shapes(int n) {
  if (n < 1) fail(ErrorKind::OutOfRange, "requires n >= 1");
  std::map<int, Count> distribution;
  Count below = 0;  // xi_shapes(n, k-1)
  for (int k = 1; k <= n; ++k) {
    const Count upto = xi_shapes(n, k);
    if (upto != below) distribution[k] = upto - below;
    below = upto;
  }
  return distribution;
}

}  // namespace permtab
