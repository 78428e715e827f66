#pragma once

#include <map>
#include <string>

#include "core.hpp"

namespace permtab {

inline constexpr int kDefaultCanonicalGuard = 9;
inline constexpr int kDefaultEpsilonGuard = 7;

// A linear order on 1..n given by a rank function: element e sits below f
// exactly when rank(e) < rank(f).
class LinearOrder {
 public:
  explicit LinearOrder(Permutation ranking) : ranking_(std::move(ranking)) {}

  static LinearOrder natural(int n) {
    return LinearOrder(Permutation::identity(n));
  }

  int size() const { return ranking_.size(); }
  int rank(int element) const { return ranking_.at(element); }
  const Permutation &ranking() const { return ranking_; }

 private:
  Permutation ranking_;
};

// Strict partial order on elements 1..n.
class Poset {
 public:
  Poset() = default;

  // Validates irreflexivity, antisymmetry and transitivity.
  static Poset from_relation(int n, std::vector<std::vector<bool>> less);

  int size() const { return n_; }
  bool less(int a, int b) const { return less_[(a - 1) * n_ + (b - 1)]; }

  // All ordered pairs (a, b) with a below b, in lexicographic order.
  std::vector<std::pair<int, int>> relations() const;

  bool operator==(const Poset &) const = default;

 private:
  friend Poset intersect_linear_orders(const LinearOrder &,
                                       const LinearOrder &);
  int n_ = 0;
  std::vector<char> less_;  // row-major n x n
};

// a comes below b iff both orders rank a below b.  The intersection of two
// total orders is automatically a strict partial order.
Poset intersect_linear_orders(const LinearOrder &sigma,
                              const LinearOrder &tau);

// Normal form: the natural order intersected with the order of first
// appearance in the word.  a comes below b iff a < b and a precedes b.
Poset poset_from_permutation(const Permutation &perm);

struct AntichainResult {
  int size = 0;
  std::vector<int> witness;  // 1-based elements, ascending
};

// Largest pairwise-incomparable subset, by branch-and-bound maximum
// independent set on the comparability graph with a greedy clique-cover
// bound.  Exact; supports up to 64 elements.
AntichainResult max_antichain(const Poset &poset);

// Relabeling-invariant encoding: the minimum, over label permutations
// compatible with the (in-degree, out-degree, height) signatures, of the
// row-major bit string of the relation.  Equal encodings iff isomorphic.
std::string canonical_form(const Poset &poset,
                           int guard = kDefaultCanonicalGuard);

bool is_isomorphic(const Poset &a, const Poset &b,
                   int guard = kDefaultCanonicalGuard);

// Census over S_n: intersection posets up to isomorphism, grouped by the
// size of their maximum antichain.  Returns k -> number of classes.
std::map<int, Count> epsilon_exact(int n, int guard = kDefaultEpsilonGuard,
                                   int threads = 1);

}  // namespace permtab
