#include "stats.hpp"

#include <algorithm>
#include <cassert>

namespace permtab {

namespace {

// Patience length of the longest strictly decreasing subsequence: strict
// LIS of the negated word via tails.
int lds_length_patience(const std::vector<int> &word) {
  std::vector<int> tails;
  for (int value : word) {
    const int negated = -value;
    auto it = std::lower_bound(tails.begin(), tails.end(), negated);
    if (it == tails.end()) {
      tails.push_back(negated);
    } else {
      *it = negated;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace

LdsResult lds(const Permutation &perm) {
  const auto &word = perm.word();
  const int n = perm.size();
  if (n == 0) return {};

  // best[i]: longest strictly decreasing subsequence starting at i.
  std::vector<int> best(n, 1);
  int length = 0;
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      if (word[j] < word[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    length = std::max(length, best[i]);
  }
  if (length != lds_length_patience(word)) {
    fail(ErrorKind::Internal,
         "patience length disagrees with the reference dynamic program");
  }

  // Earliest position able to continue a run of the needed length gives
  // the lexicographically least witness.
  LdsResult result;
  result.length = length;
  int need = length;
  int prev_value = n + 1;
  for (int i = 0; i < n && need > 0; ++i) {
    if (word[i] < prev_value && best[i] >= need) {
      result.witness.push_back(i + 1);
      prev_value = word[i];
      --need;
    }
  }
  assert(static_cast<int>(result.witness.size()) == length);
  return result;
}

bool is_k_divisible(const Permutation &perm, int k) {
  if (k < 1) fail(ErrorKind::OutOfRange, "divisibility order must be >= 1");
  return lds(perm).length >= k;
}

std::vector<int> hook_lengths(const Partition &shape) {
  const auto &parts = shape.parts();
  const int m = shape.num_parts();
  std::vector<int> hooks;
  hooks.reserve(shape.weight());
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      const int arm = parts[r] - c - 1;
      int leg = 0;
      for (int r2 = r + 1; r2 < m && parts[r2] > c; ++r2) ++leg;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

Count syt_count_hook(const Partition &shape) {
  Count numerator = factorial(shape.weight());
  Count denominator = 1;
  for (int h : hook_lengths(shape)) denominator *= h;
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    fail(ErrorKind::Internal, "hook product does not divide n!");
  }
  return numerator / denominator;
}

namespace {

void enumerate_fillings(const std::vector<int> &parts, int next_value,
                        int n, std::vector<int> &fill_counts,
                        std::vector<std::vector<int>> &rows,
                        std::vector<StandardTableau> &out) {
  if (next_value > n) {
    out.push_back(StandardTableau::unchecked(rows));
    return;
  }
  for (size_t r = 0; r < parts.size(); ++r) {
    if (fill_counts[r] >= parts[r]) continue;
    // Cell above must already be filled for the column to increase.
    if (r > 0 && fill_counts[r - 1] <= fill_counts[r]) continue;
    ++fill_counts[r];
    rows[r].push_back(next_value);
    enumerate_fillings(parts, next_value + 1, n, fill_counts, rows, out);
    rows[r].pop_back();
    --fill_counts[r];
  }
}

}  // namespace

std::vector<StandardTableau> syt_enumerate(const Partition &shape,
                                           int guard) {
  if (shape.weight() > guard) {
    fail(ErrorKind::GuardExceeded,
         "tableau enumeration of weight " + std::to_string(shape.weight()) +
             " exceeds the guard of " + std::to_string(guard));
  }
  std::vector<StandardTableau> out;
  std::vector<int> fill_counts(shape.num_parts(), 0);
  std::vector<std::vector<int>> rows(shape.num_parts());
  enumerate_fillings(shape.parts(), 1, shape.weight(), fill_counts, rows,
                     out);
  return out;
}

Count catalan(int n) {
  if (n < 0) fail(ErrorKind::OutOfRange, "catalan of a negative index");
  Count numerator = factorial(2 * n);
  Count denominator = factorial(n) * factorial(n + 1);
  assert(mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()));
  return numerator / denominator;
}

}  // namespace permtab
