#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "rsk.hpp"
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

std::multiset<int> entry_multiset(const GeneralizedTableau &t) {
  std::multiset<int> out;
  for (const auto &row : t.rows()) out.insert(row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("schensted insertion steps") {
  const auto bumped =
      schensted_insert(GeneralizedTableau::from_rows({{2, 3}}), 1);
  CHECK(bumped.tableau.rows() ==
        std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(bumped.row == 2);
  CHECK(bumped.col == 1);

  const auto first = schensted_insert(GeneralizedTableau(), 7);
  CHECK(first.tableau.rows() == std::vector<std::vector<int>>{{7}});
  CHECK(first.row == 1);
  CHECK(first.col == 1);

  const auto appended =
      schensted_insert(GeneralizedTableau::from_rows({{1, 2}}), 3);
  CHECK(appended.tableau.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(appended.row == 1);
  CHECK(appended.col == 3);
}

TEST_CASE("insertion keeps tableau invariants at every step") {
  std::mt19937 rng(12021);
  for (int trial = 0; trial < 200; ++trial) {
    GeneralizedTableau t;
    std::uniform_int_distribution<int> value(1, 6);
    for (int step = 0; step < 15; ++step) {
      t = schensted_insert(t, value(rng)).tableau;
      CHECK_NOTHROW(GeneralizedTableau::from_rows(t.rows()));
    }
  }
}

TEST_CASE("rsk forward on the worked examples") {
  const auto pair = rsk_forward(Permutation::from_word({2, 3, 1}));
  CHECK(pair.p.rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(pair.q.rows() == std::vector<std::vector<int>>{{1, 2}, {3}});

  const auto increasing = rsk_forward(Permutation::from_word({1, 2, 3}));
  CHECK(increasing.p.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(increasing.q.rows() == std::vector<std::vector<int>>{{1, 2, 3}});

  const auto decreasing = rsk_forward(Permutation::from_word({3, 2, 1}));
  CHECK(decreasing.p.rows() ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(decreasing.q.rows() ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("rsk inverse undoes the forward map") {
  const auto p = StandardTableau::from_rows({{1, 3}, {2}});
  const auto q = StandardTableau::from_rows({{1, 2}, {3}});
  CHECK(rsk_inverse(p, q).word() == std::vector<int>{2, 3, 1});

  const auto row = StandardTableau::from_rows({{1, 2, 3}});
  CHECK(rsk_inverse(row, row).word() == std::vector<int>{1, 2, 3});

  try {
    rsk_inverse(StandardTableau::from_rows({{1, 2}, {3}}),
                StandardTableau::from_rows({{1}, {2}, {3}}));
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
  }
}

TEST_CASE("rsk round trip over whole symmetric groups") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const std::vector<int> &word) {
      const auto perm = Permutation::from_word(word);
      const auto pair = rsk_forward(perm);
      CHECK(pair.p.shape() == pair.q.shape());
      CHECK(rsk_inverse(pair.p, pair.q) == perm);
    });
  }
}

TEST_CASE("rsk is onto same-shape tableau pairs") {
  for (int n = 1; n <= 4; ++n) {
    long pairs_seen = 0;
    for (const auto &shape : partitions(n, n)) {
      const auto tableaux = syt_enumerate(shape);
      for (const auto &p : tableaux) {
        for (const auto &q : tableaux) {
          const auto perm = rsk_inverse(p, q);
          const auto pair = rsk_forward(perm);
          CHECK(pair.p == p);
          CHECK(pair.q == q);
          ++pairs_seen;
        }
      }
    }
    long n_factorial = 1;
    for (int i = 2; i <= n; ++i) n_factorial *= i;
    CHECK(pairs_seen == n_factorial);
  }
}

TEST_CASE("knuth forward on the worked examples") {
  const auto pair = knuth_forward(
      TwoLineArray::from_pairs({{1, 1}, {1, 3}, {2, 2}}));
  CHECK(pair.p.rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(pair.q.rows() == std::vector<std::vector<int>>{{1, 1}, {2}});

  const auto flat = knuth_forward(TwoLineArray::from_pairs({{1, 1}, {2, 2}}));
  CHECK(flat.p.rows() == std::vector<std::vector<int>>{{1, 2}});
  CHECK(flat.q.rows() == std::vector<std::vector<int>>{{1, 2}});

  const auto empty = knuth_forward(TwoLineArray());
  CHECK(empty.p.empty());
  CHECK(empty.q.empty());
}

TEST_CASE("knuth inverse on the worked examples") {
  const auto array =
      knuth_inverse(GeneralizedTableau::from_rows({{1, 2}, {3}}),
                    GeneralizedTableau::from_rows({{1, 1}, {2}}));
  CHECK(array.pairs() ==
        std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 2}});

  CHECK(knuth_inverse(GeneralizedTableau(), GeneralizedTableau()).empty());

  try {
    knuth_inverse(GeneralizedTableau::from_rows({{1, 2}}),
                  GeneralizedTableau::from_rows({{1}, {2}}));
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
  }
}

TEST_CASE("knuth round trip on random arrays with content checks") {
  std::mt19937 rng(90125);
  std::uniform_int_distribution<int> length(0, 12);
  std::uniform_int_distribution<int> letter(1, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::pair<int, int>> pairs(length(rng));
    std::multiset<int> us, vs;
    for (auto &[u, v] : pairs) {
      u = letter(rng);
      v = letter(rng);
      us.insert(u);
      vs.insert(v);
    }
    std::sort(pairs.begin(), pairs.end());
    const auto array = TwoLineArray::from_pairs(std::move(pairs));
    const auto pair = knuth_forward(array);
    CHECK(pair.p.shape() == pair.q.shape());
    CHECK(entry_multiset(pair.p) == vs);
    CHECK(entry_multiset(pair.q) == us);
    CHECK(knuth_inverse(pair.p, pair.q) == array);
    CHECK(matrix_to_array(array_to_matrix(array)) == array);
  }
}

TEST_CASE("knuth inversion is total on same-shape pairs") {
  // Every same-shape pair of column-strict tableaux with bounded content
  // comes from exactly one array.
  const int max_entry = 3;
  std::function<void(std::vector<std::vector<int>> &, int, int,
                     const std::vector<int> &,
                     std::vector<GeneralizedTableau> &)>
      fill = [&](std::vector<std::vector<int>> &rows, int r, int c,
                 const std::vector<int> &shape,
                 std::vector<GeneralizedTableau> &out) {
        if (r == static_cast<int>(shape.size())) {
          out.push_back(GeneralizedTableau::from_rows(rows));
          return;
        }
        if (c == shape[r]) {
          fill(rows, r + 1, 0, shape, out);
          return;
        }
        for (int value = 1; value <= max_entry; ++value) {
          if (c > 0 && value < rows[r][c - 1]) continue;
          if (r > 0 && value <= rows[r - 1][c]) continue;
          rows[r].push_back(value);
          fill(rows, r, c + 1, shape, out);
          rows[r].pop_back();
        }
      };

  for (int n = 1; n <= 4; ++n) {
    for (const auto &shape : partitions(n, n)) {
      std::vector<GeneralizedTableau> fillings;
      std::vector<std::vector<int>> rows(shape.num_parts());
      fill(rows, 0, 0, shape.parts(), fillings);
      for (const auto &p : fillings) {
        for (const auto &q : fillings) {
          const auto array = knuth_inverse(p, q);
          const auto pair = knuth_forward(array);
          CHECK(pair.p == p);
          CHECK(pair.q == q);
        }
      }
    }
  }
}

TEST_CASE("permutations embed as two-line arrays") {
  CHECK(perm_to_array(Permutation::from_word({2, 3, 1})).pairs() ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 1}});
  CHECK(perm_to_array(Permutation::from_word({1})).pairs() ==
        std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(perm_to_array(Permutation::from_word({2, 1})).pairs() ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
}

TEST_CASE("knuth insertion of an embedded permutation matches rsk") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const std::vector<int> &word) {
      const auto perm = Permutation::from_word(word);
      const auto via_knuth = knuth_forward(perm_to_array(perm));
      const auto via_rsk = rsk_forward(perm);
      CHECK(via_knuth.p == via_rsk.p.as_generalized());
      CHECK(via_knuth.q == via_rsk.q.as_generalized());
    });
  }
}

TEST_CASE("array and matrix forms convert both ways") {
  const auto array = TwoLineArray::from_pairs({{1, 2}, {1, 2}, {2, 1}});
  const auto matrix = array_to_matrix(array, 2, 2);
  CHECK(matrix.entries() ==
        std::vector<std::vector<long>>{{0, 2}, {1, 0}});
  CHECK(matrix_to_array(matrix) == array);

  const auto empty = array_to_matrix(TwoLineArray(), 1, 1);
  CHECK(empty.entries() == std::vector<std::vector<long>>{{0}});

  try {
    array_to_matrix(array, 1, 2);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DimsTooSmall);
  }
}
