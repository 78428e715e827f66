#pragma once

#include <algorithm>
#include <future>
#include <vector>

namespace permtab {

// Calls fn(word) for every length-n word over 1..n whose first letter is
// `first` and whose remaining letters are the other values in every order.
// Requires 1 <= first <= n.
template <class Fn>
void for_each_permutation_with_first(int n, int first, Fn &&fn) {
  std::vector<int> word(n);
  word[0] = first;
  int pos = 1;
  for (int v = 1; v <= n; ++v) {
    if (v != first) word[pos++] = v;
  }
  do {
    fn(const_cast<const std::vector<int> &>(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

// Runs fn(block) for every block in [0, blocks); blocks are distributed
// round-robin over min(threads, blocks) workers.  fn must be safe to call
// concurrently for distinct blocks.
template <class Fn>
void run_blocks(int blocks, int threads, Fn &&fn) {
  const int workers = std::max(1, std::min(threads, blocks));
  if (workers == 1) {
    for (int b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&fn, w, workers,
                                                      blocks]() {
      for (int b = w; b < blocks; b += workers) fn(b);
    }));
  }
  for (auto &f : futures) f.get();
}

}  // namespace permtab
