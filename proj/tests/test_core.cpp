#include <doctest.h>

#include <algorithm>
#include <vector>

#include "core.hpp"

using namespace permtab;

namespace {

// Independent partition-count oracle: p(n, k) = partitions of n into at
// most k parts, by the textbook recurrence p(n,k) = p(n,k-1) + p(n-k,k).
long partition_count_oracle(int n, int k) {
  std::vector<std::vector<long>> table(n + 1, std::vector<long>(k + 1, 0));
  for (int j = 0; j <= k; ++j) table[0][j] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      table[i][j] = table[i][j - 1];
      if (i >= j) table[i][j] += table[i - j][j];
    }
  }
  return table[n][k];
}

}  // namespace

TEST_CASE("permutation validation") {
  const auto p = Permutation::from_word({2, 3, 1});
  CHECK(p.size() == 3);
  CHECK(p.at(1) == 2);
  CHECK(p.position_of(1) == 3);

  CHECK(Permutation::from_word({1}).size() == 1);
  CHECK(Permutation::from_word({}).size() == 0);

  CHECK_THROWS_AS(Permutation::from_word({0, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_word({2, 3}), Error);
  try {
    Permutation::from_word({1, 1, 2});
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotABijection);
  }
}

TEST_CASE("permutation validation accepts exactly n! words") {
  for (int n = 1; n <= 6; ++n) {
    // Sweep all n^n words over 1..n.
    long accepted = 0;
    std::vector<int> word(n, 1);
    while (true) {
      try {
        Permutation::from_word(word);
        ++accepted;
      } catch (const Error &) {
      }
      int pos = n - 1;
      while (pos >= 0 && word[pos] == n) word[pos--] = 1;
      if (pos < 0) break;
      ++word[pos];
    }
    long expected = 1;
    for (int i = 2; i <= n; ++i) expected *= i;
    CHECK(accepted == expected);
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  // No overflow at sizes far beyond machine words.
  CHECK(factorial(40) % Count(41) != 0);  // 41 is prime
  CHECK(binomial(100, 50) > Count("1000000000000000000000000000"));
}

TEST_CASE("partition validation") {
  const auto p = Partition::from_parts({3, 2, 2});
  CHECK(p.weight() == 7);
  CHECK(p.num_parts() == 3);
  CHECK_THROWS_AS(Partition::from_parts({2, 3}), Error);
  CHECK_THROWS_AS(Partition::from_parts({2, 0}), Error);
  CHECK(Partition::from_parts({}).empty());
}

TEST_CASE("partitions listing matches hand enumeration") {
  auto parts_of = [](const std::vector<Partition> &list) {
    std::vector<std::vector<int>> out;
    for (const auto &p : list) out.push_back(p.parts());
    return out;
  };
  CHECK(parts_of(partitions(4, 2)) ==
        std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}});
  CHECK(parts_of(partitions(3, 3)) ==
        std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(parts_of(partitions(1, 5)) == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(partitions(0, 3), Error);
  CHECK_THROWS_AS(partitions(3, 0), Error);
}

TEST_CASE("partitions are valid, complete and reverse-lexicographic") {
  for (int n = 1; n <= 14; ++n) {
    for (int max_parts = 1; max_parts <= n; ++max_parts) {
      const auto list = partitions(n, max_parts);
      CHECK(static_cast<long>(list.size()) ==
            partition_count_oracle(n, max_parts));
      for (size_t i = 0; i < list.size(); ++i) {
        const auto &parts = list[i].parts();
        CHECK(list[i].weight() == n);
        CHECK(list[i].num_parts() <= max_parts);
        CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
        if (i > 0) CHECK(list[i - 1].parts() > parts);
      }
    }
  }
  // Unrestricted partition numbers up to n = 20.
  for (int n = 1; n <= 20; ++n) {
    CHECK(static_cast<long>(partitions(n, n).size()) ==
          partition_count_oracle(n, n));
  }
}

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(StandardTableau::from_rows({{1, 3}, {2}}));
  CHECK_THROWS_AS(StandardTableau::from_rows({{1, 2}, {2}}), Error);
  CHECK_THROWS_AS(StandardTableau::from_rows({{2, 3}, {1}}), Error);
  CHECK_THROWS_AS(StandardTableau::from_rows({{1}, {2, 3}}), Error);
  CHECK_THROWS_AS(StandardTableau::from_rows({{2, 1, 3}}), Error);

  CHECK_NOTHROW(GeneralizedTableau::from_rows({{1, 1, 2}, {2, 3}}));
  CHECK_THROWS_AS(GeneralizedTableau::from_rows({{1, 1}, {1}}), Error);
  CHECK_THROWS_AS(GeneralizedTableau::from_rows({{2, 1}}), Error);
  CHECK_THROWS_AS(GeneralizedTableau::from_rows({{1, 0}}), Error);
  CHECK(GeneralizedTableau::from_rows({}).empty());

  const auto t = GeneralizedTableau::from_rows({{1, 2, 2}, {3}});
  CHECK(t.shape().parts() == std::vector<int>{3, 1});
  CHECK(t.num_cells() == 4);
}

TEST_CASE("two-line array ordering") {
  CHECK_NOTHROW(TwoLineArray::from_pairs({{1, 1}, {1, 3}, {2, 2}}));
  CHECK_NOTHROW(TwoLineArray::from_pairs({{1, 2}, {1, 2}}));
  CHECK(TwoLineArray::from_pairs({}).empty());
  try {
    TwoLineArray::from_pairs({{2, 1}, {1, 2}});
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotLexSorted);
  }
  CHECK_THROWS_AS(TwoLineArray::from_pairs({{1, 3}, {1, 2}}), Error);
  CHECK_THROWS_AS(TwoLineArray::from_pairs({{0, 1}}), Error);
}

TEST_CASE("multiplicity matrix validation") {
  const auto m = MultiplicityMatrix::from_entries({{0, 2}, {1, 0}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m.entry(1, 2) == 2);
  CHECK_THROWS_AS(MultiplicityMatrix::from_entries({{0, -1}}), Error);
  CHECK_THROWS_AS(MultiplicityMatrix::from_entries({{0, 1}, {0}}), Error);
}
