#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "counting.hpp"
#include "posets.hpp"
#include "stats.hpp"

using namespace permtab;

namespace {

void for_each_permutation(int n, const std::function<void(
                                     const std::vector<int> &)> &fn) {
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  do {
    fn(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<std::vector<bool>> relation_of(const Poset &p) {
  const int n = p.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) less[a - 1][b - 1] = p.less(a, b);
  }
  return less;
}

Poset relabeled(const Poset &p, const std::vector<int> &map) {
  const int n = p.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (p.less(a, b)) less[map[a - 1] - 1][map[b - 1] - 1] = true;
    }
  }
  return Poset::from_relation(n, less);
}

// The 15-element union of chains of lengths 3, 5 and 7: within a block,
// earlier elements sit above later ones.
Poset chains_3_5_7() {
  const std::vector<std::pair<int, int>> blocks{{1, 3}, {4, 8}, {9, 15}};
  std::vector<std::vector<bool>> less(15, std::vector<bool>(15, false));
  for (const auto &[lo, hi] : blocks) {
    for (int a = lo; a <= hi; ++a) {
      for (int b = a + 1; b <= hi; ++b) less[b - 1][a - 1] = true;
    }
  }
  return Poset::from_relation(15, less);
}

}  // namespace

TEST_CASE("intersection of linear orders") {
  const auto natural = LinearOrder::natural(3);
  const auto chain = intersect_linear_orders(natural, natural);
  CHECK(chain.relations() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

  const auto reverse =
      LinearOrder(Permutation::from_word({3, 2, 1}));
  CHECK(intersect_linear_orders(natural, reverse).relations().empty());

  const auto vee = intersect_linear_orders(
      natural, LinearOrder(Permutation::from_word({1, 3, 2})));
  CHECK(vee.relations() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});

  try {
    intersect_linear_orders(natural, LinearOrder::natural(4));
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }
}

TEST_CASE("intersections satisfy the order axioms") {
  std::mt19937 rng(40961);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = b[i] = i + 1;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const auto poset =
        intersect_linear_orders(LinearOrder(Permutation::from_word(a)),
                                LinearOrder(Permutation::from_word(b)));
    CHECK_NOTHROW(Poset::from_relation(n, relation_of(poset)));
  }
}

TEST_CASE("poset of a permutation") {
  CHECK(poset_from_permutation(Permutation::from_word({1, 2, 3}))
            .relations() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(poset_from_permutation(Permutation::from_word({3, 2, 1}))
            .relations()
            .empty());
  CHECK(poset_from_permutation(Permutation::from_word({2, 3, 1}))
            .relations() ==
        std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("maximum antichain") {
  std::vector<std::vector<bool>> chain5(5, std::vector<bool>(5, false));
  for (int a = 1; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) chain5[a - 1][b - 1] = true;
  }
  CHECK(max_antichain(Poset::from_relation(5, chain5)).size == 1);

  const auto antichain4 = Poset::from_relation(
      4, std::vector<std::vector<bool>>(4, std::vector<bool>(4, false)));
  const auto result = max_antichain(antichain4);
  CHECK(result.size == 4);
  CHECK(result.witness == std::vector<int>{1, 2, 3, 4});

  CHECK(max_antichain(chains_3_5_7()).size == 3);
}

TEST_CASE("antichains of the intersection order are decreasing runs") {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const std::vector<int> &word) {
      const auto perm = Permutation::from_word(word);
      CHECK(max_antichain(poset_from_permutation(perm)).size ==
            lds(perm).length);
    });
  }
}

TEST_CASE("canonical form is relabeling-invariant") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = i + 1;
    std::shuffle(word.begin(), word.end(), rng);
    const auto poset = poset_from_permutation(Permutation::from_word(word));
    const auto reference = canonical_form(poset);
    std::vector<int> map = word;
    for (int relabel = 0; relabel < 100; ++relabel) {
      std::shuffle(map.begin(), map.end(), rng);
      CHECK(canonical_form(relabeled(poset, map)) == reference);
    }
  }
}

TEST_CASE("canonical form separates the 3-element shapes") {
  const auto vee = poset_from_permutation(Permutation::from_word({1, 3, 2}));
  const auto wedge =
      poset_from_permutation(Permutation::from_word({2, 1, 3}));
  CHECK(canonical_form(vee) != canonical_form(wedge));

  const auto a = poset_from_permutation(Permutation::from_word({2, 3, 1}));
  const auto b = poset_from_permutation(Permutation::from_word({3, 1, 2}));
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("isomorphism checks") {
  const auto chain3 = poset_from_permutation(Permutation::from_word({1, 2, 3}));
  const auto chain3b = relabeled(chain3, {2, 3, 1});
  CHECK(is_isomorphic(chain3, chain3b));
  const auto antichain3 =
      poset_from_permutation(Permutation::from_word({3, 2, 1}));
  CHECK_FALSE(is_isomorphic(chain3, antichain3));
  CHECK_FALSE(is_isomorphic(chain3, poset_from_permutation(
                                         Permutation::from_word({1, 2}))));
}

TEST_CASE("guards on the expensive poset operations") {
  const auto big = chains_3_5_7();
  try {
    canonical_form(big);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
  }
  CHECK_NOTHROW(canonical_form(big, 15));
  try {
    epsilon_exact(8);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
  }
}

TEST_CASE("census of small ground sets") {
  const auto one = epsilon_exact(1);
  CHECK(one == std::map<int, Count>{{1, 1}});
  const auto two = epsilon_exact(2);
  CHECK(two == std::map<int, Count>{{1, 1}, {2, 1}});
  const auto three = epsilon_exact(3);
  CHECK(three == std::map<int, Count>{{1, 1}, {2, 3}, {3, 1}});
}

TEST_CASE("census totals match the unlabeled poset counts") {
  // Every poset on up to 5 points has order dimension at most 2, so the
  // census must find every unlabeled poset: 1, 2, 5, 16, 63.  On 6 points
  // exactly three posets need a third linear order, leaving 318 - 3.
  const long expected[] = {1, 2, 5, 16, 63, 315};
  for (int n = 1; n <= 6; ++n) {
    Count total = 0;
    for (const auto &[k, count] : epsilon_exact(n)) total += count;
    CHECK(total == expected[n - 1]);
  }
}

TEST_CASE("census undercounts the sweep exactly when words collide") {
  for (int n = 1; n <= 7; ++n) {
    const auto census = epsilon_exact(n);
    Count total = 0;
    for (const auto &[k, count] : census) total += count;
    if (n < 3) {
      CHECK(total == factorial(n));
    } else {
      CHECK(total < factorial(n));
    }
    const auto distribution = lds_distribution_brute(n);
    for (const auto &[k, count] : census) {
      CHECK(count <= distribution.at(k));
    }
  }
}

TEST_CASE("census is stable under worker count") {
  CHECK(epsilon_exact(5, kDefaultEpsilonGuard, 1) ==
        epsilon_exact(5, kDefaultEpsilonGuard, 4));
}
