#include "posets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "sn_sweep.hpp"

namespace permtab {

Poset Poset::from_relation(int n, std::vector<std::vector<bool>> less) {
  if (n < 0 || static_cast<int>(less.size()) != n) {
    fail(ErrorKind::InvalidArgument, "relation size does not match n");
  }
  Poset p;
  p.n_ = n;
  p.less_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(less[a].size()) != n) {
      fail(ErrorKind::InvalidArgument, "relation rows must have length n");
    }
    for (int b = 0; b < n; ++b) {
      p.less_[a * n + b] = less[a][b] ? 1 : 0;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (p.less_[a * n + a]) {
      fail(ErrorKind::InvalidArgument, "order must be irreflexive");
    }
    for (int b = 0; b < n; ++b) {
      if (p.less_[a * n + b] && p.less_[b * n + a]) {
        fail(ErrorKind::InvalidArgument, "order must be antisymmetric");
      }
      if (!p.less_[a * n + b]) continue;
      for (int c = 0; c < n; ++c) {
        if (p.less_[b * n + c] && !p.less_[a * n + c]) {
          fail(ErrorKind::InvalidArgument, "order must be transitive");
        }
      }
    }
  }
  return p;
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b = 1; b <= n_; ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Poset intersect_linear_orders(const LinearOrder &sigma,
                              const LinearOrder &tau) {
  if (sigma.size() != tau.size()) {
    fail(ErrorKind::SizeMismatch,
         "linear orders must share the same ground set size");
  }
  const int n = sigma.size();
  Poset p;
  p.n_ = n;
  p.less_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (sigma.rank(a) < sigma.rank(b) && tau.rank(a) < tau.rank(b)) {
        p.less_[(a - 1) * n + (b - 1)] = 1;
      }
    }
  }
  return p;
}

Poset poset_from_permutation(const Permutation &perm) {
  const int n = perm.size();
  std::vector<int> ranking(n);
  for (int value = 1; value <= n; ++value) {
    ranking[value - 1] = perm.position_of(value);
  }
  return intersect_linear_orders(
      LinearOrder::natural(n),
      LinearOrder(Permutation::from_word(std::move(ranking))));
}

namespace {

// Branch-and-bound maximum independent set over bitmask graphs.
class MisSolver {
 public:
  MisSolver(int n, std::vector<uint64_t> adjacency)
      : n_(n), adj_(std::move(adjacency)) {}

  void solve() {
    const uint64_t all = n_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1);
    expand(all, 0, 0);
  }

  int best_size() const { return best_size_; }
  uint64_t best_set() const { return best_set_; }

 private:
  int clique_cover_bound(uint64_t candidates) const {
    int cliques = 0;
    while (candidates) {
      uint64_t clique = uint64_t{1} << std::countr_zero(candidates);
      candidates &= ~clique;
      uint64_t rest = candidates;
      while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        // v joins if adjacent to the whole clique so far.
        if ((clique & ~adj_[v]) == 0) {
          clique |= uint64_t{1} << v;
          candidates &= ~(uint64_t{1} << v);
        }
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(uint64_t candidates, uint64_t chosen, int size) {
    if (size > best_size_) {
      best_size_ = size;
      best_set_ = chosen;
    }
    if (!candidates) return;
    if (size + clique_cover_bound(candidates) <= best_size_) return;
    // Branch on the candidate with most comparabilities left.
    int pick = -1, pick_degree = -1;
    uint64_t scan = candidates;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int degree = std::popcount(adj_[v] & candidates);
      if (degree > pick_degree) {
        pick_degree = degree;
        pick = v;
      }
    }
    const uint64_t bit = uint64_t{1} << pick;
    expand(candidates & ~(adj_[pick] | bit), chosen | bit, size + 1);
    expand(candidates & ~bit, chosen, size);
  }

  int n_;
  std::vector<uint64_t> adj_;
  int best_size_ = 0;
  uint64_t best_set_ = 0;
};

}  // namespace

AntichainResult max_antichain(const Poset &poset) {
  const int n = poset.size();
  if (n < 1) fail(ErrorKind::OutOfRange, "poset must be nonempty");
  if (n > 64) {
    fail(ErrorKind::OutOfRange, "antichain search supports up to 64 elements");
  }
  std::vector<uint64_t> adjacency(n, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b && (poset.less(a, b) || poset.less(b, a))) {
        adjacency[a - 1] |= uint64_t{1} << (b - 1);
      }
    }
  }
  MisSolver solver(n, std::move(adjacency));
  solver.solve();
  AntichainResult result;
  result.size = solver.best_size();
  uint64_t set = solver.best_set();
  while (set) {
    result.witness.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return result;
}

namespace {

struct Signature {
  int indeg = 0;
  int outdeg = 0;
  int height = 0;
  auto operator<=>(const Signature &) const = default;
};

std::vector<Signature> signatures(const Poset &poset) {
  const int n = poset.size();
  std::vector<Signature> sig(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (poset.less(b, a)) ++sig[a - 1].indeg;
      if (poset.less(a, b)) ++sig[a - 1].outdeg;
    }
  }
  // Height: longest chain strictly below, by increasing in-degree of the
  // full relation (b < a implies indeg(b) < indeg(a) under transitivity).
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return sig[x].indeg < sig[y].indeg;
  });
  for (int idx : order) {
    int h = 0;
    for (int b = 1; b <= poset.size(); ++b) {
      if (poset.less(b, idx + 1)) h = std::max(h, sig[b - 1].height + 1);
    }
    sig[idx].height = h;
  }
  return sig;
}

// Packs the relabeled relation in row-major order, 8 bits per byte.
// Returns false (leaving `out` partial) as soon as the string proves
// greater than `best`; `best` empty means no bound yet.
bool build_bits(const Poset &poset, const std::vector<int> &assign,
                const std::string &best, std::string &out) {
  const int n = poset.size();
  out.clear();
  unsigned byte = 0;
  int filled = 0;
  bool undecided = !best.empty();  // still equal to best's prefix
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      byte =
          (byte << 1) | (poset.less(assign[i] + 1, assign[j] + 1) ? 1u : 0u);
      if (++filled == 8) {
        out.push_back(static_cast<char>(byte));
        if (undecided) {
          const size_t at = out.size() - 1;
          const auto ours = static_cast<unsigned char>(out[at]);
          const auto theirs = static_cast<unsigned char>(best[at]);
          if (ours > theirs) return false;
          if (ours < theirs) undecided = false;
        }
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    byte <<= (8 - filled);
    out.push_back(static_cast<char>(byte));
    if (undecided &&
        static_cast<unsigned char>(out.back()) >
            static_cast<unsigned char>(best.back())) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string canonical_form(const Poset &poset, int guard) {
  const int n = poset.size();
  if (n > guard) {
    fail(ErrorKind::GuardExceeded,
         "canonical form of a " + std::to_string(n) +
             "-element poset exceeds the guard of " + std::to_string(guard));
  }

  const auto sig = signatures(poset);

  // Sorted signature sequence is itself part of the encoding.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return sig[x] < sig[y];
  });

  std::string header;
  header += std::to_string(n);
  header += '|';
  for (int i = 0; i < n; ++i) {
    const auto &s = sig[order[i]];
    header += std::to_string(s.indeg) + "," + std::to_string(s.outdeg) +
              "," + std::to_string(s.height) + ";";
  }
  header += '|';

  // Group consecutive equal signatures; only in-block relabelings can be
  // isomorphisms.
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || sig[order[i]] != sig[order[i - 1]]) blocks.emplace_back();
    blocks.back().push_back(order[i]);
  }

  std::string best;
  std::string candidate;
  std::vector<int> assign;
  assign.reserve(n);
  while (true) {
    assign.clear();
    for (const auto &block : blocks) {
      assign.insert(assign.end(), block.begin(), block.end());
    }
    if (build_bits(poset, assign, best, candidate)) {
      if (best.empty() || candidate < best) best = candidate;
    }
    // Odometer over per-block permutations, last block fastest.
    int b = static_cast<int>(blocks.size()) - 1;
    while (b >= 0 && !std::next_permutation(blocks[b].begin(),
                                            blocks[b].end())) {
      --b;
    }
    if (b < 0) break;
  }
  return header + best;
}

bool is_isomorphic(const Poset &a, const Poset &b, int guard) {
  if (a.size() != b.size()) return false;
  return canonical_form(a, guard) == canonical_form(b, guard);
}

std::map<int, Count> epsilon_exact(int n, int guard, int threads) {
  if (n < 1) fail(ErrorKind::OutOfRange, "census requires n >= 1");
  if (n > guard) {
    fail(ErrorKind::GuardExceeded,
         "census over S_" + std::to_string(n) + " exceeds the guard of " +
             std::to_string(guard));
  }
  // canonical form -> maximum antichain size, one entry per class
  std::unordered_map<std::string, int> classes;
  std::mutex classes_mutex;
  run_blocks(n, threads, [&](int block) {
    std::unordered_map<std::string, int> local;
    for_each_permutation_with_first(n, block + 1, [&](const auto &word) {
      const Poset poset = poset_from_permutation(Permutation::from_word(word));
      std::string key = canonical_form(poset, n);
      if (!local.contains(key)) {
        local.emplace(std::move(key), max_antichain(poset).size);
      }
    });
    std::lock_guard<std::mutex> lock(classes_mutex);
    classes.merge(local);
  });
  std::map<int, Count> census;
  for (const auto &[key, antichain] : classes) census[antichain] += 1;
  return census;
}

}  // namespace permtab
