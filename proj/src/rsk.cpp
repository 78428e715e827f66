#include "rsk.hpp"

#include <algorithm>
#include <cassert>

namespace permtab {

namespace {

// Core bumping loop over raw rows; returns the created cell (1-based).
std::pair<int, int> insert_into_rows(std::vector<std::vector<int>> &rows,
                                     int x) {
  int carry = x;
  for (size_t r = 0; r < rows.size(); ++r) {
    auto &row = rows[r];
    if (row.empty() || carry >= row.back()) {
      row.push_back(carry);
      return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
    }
    // Least entry strictly greater than the carried value; rows are
    // weakly increasing, so equal values pass to the right.
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    std::swap(*it, carry);
  }
  rows.push_back({carry});
  return {static_cast<int>(rows.size()), 1};
}

// Reverse bumping from the given cell, which must be the last cell of its
// row; returns the value expelled from row 1.
int uninsert_from_rows(std::vector<std::vector<int>> &rows, int row,
                       [[maybe_unused]] int col) {
  assert(row >= 1 && row <= static_cast<int>(rows.size()));
  assert(col == static_cast<int>(rows[row - 1].size()));
  int carry = rows[row - 1].back();
  rows[row - 1].pop_back();
  if (rows[row - 1].empty()) rows.erase(rows.begin() + (row - 1));
  for (int r = row - 1; r >= 1; --r) {
    auto &above = rows[r - 1];
    // Rightmost entry strictly below the carried value: that is the entry
    // whose bump originally sent the carry down.
    auto it = std::lower_bound(above.begin(), above.end(), carry);
    assert(it != above.begin());
    --it;
    std::swap(*it, carry);
  }
  return carry;
}

}  // namespace

InsertResult schensted_insert(const GeneralizedTableau &tableau, int x) {
  if (x < 1) {
    fail(ErrorKind::InvalidArgument, "inserted values must be positive");
  }
  auto rows = tableau.rows();
  auto [row, col] = insert_into_rows(rows, x);
  return {GeneralizedTableau::unchecked(std::move(rows)), row, col};
}

TableauPair rsk_forward(const Permutation &perm) {
  std::vector<std::vector<int>> p_rows;
  std::vector<std::vector<int>> q_rows;
  for (int i = 1; i <= perm.size(); ++i) {
    auto [row, col] = insert_into_rows(p_rows, perm.at(i));
    if (row > static_cast<int>(q_rows.size())) q_rows.emplace_back();
    assert(col == static_cast<int>(q_rows[row - 1].size()) + 1);
    q_rows[row - 1].push_back(i);
  }
  return {StandardTableau::unchecked(std::move(p_rows)),
          StandardTableau::unchecked(std::move(q_rows))};
}

Permutation rsk_inverse(const StandardTableau &p, const StandardTableau &q) {
  if (p.shape() != q.shape()) {
    fail(ErrorKind::ShapeMismatch,
         "insertion and recording tableaux must have equal shapes");
  }
  const int n = p.num_cells();
  // Cell of each value of Q, found once up front.
  std::vector<std::pair<int, int>> cell_of(n + 1);
  for (int r = 1; r <= q.num_rows(); ++r) {
    const auto &row = q.rows()[r - 1];
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      cell_of[row[c - 1]] = {r, c};
    }
  }
  auto rows = p.rows();
  std::vector<int> word(n);
  for (int i = n; i >= 1; --i) {
    auto [r, c] = cell_of[i];
    word[i - 1] = uninsert_from_rows(rows, r, c);
  }
  return Permutation::from_word(std::move(word));
}

GeneralizedPair knuth_forward(const TwoLineArray &array) {
  std::vector<std::vector<int>> p_rows;
  std::vector<std::vector<int>> q_rows;
  for (const auto &[u, v] : array.pairs()) {
    auto [row, col] = insert_into_rows(p_rows, v);
    if (row > static_cast<int>(q_rows.size())) q_rows.emplace_back();
    assert(col == static_cast<int>(q_rows[row - 1].size()) + 1);
    q_rows[row - 1].push_back(u);
  }
  return {GeneralizedTableau::unchecked(std::move(p_rows)),
          GeneralizedTableau::unchecked(std::move(q_rows))};
}

TwoLineArray knuth_inverse(const GeneralizedTableau &p,
                           const GeneralizedTableau &q) {
  if (p.shape() != q.shape()) {
    fail(ErrorKind::ShapeMismatch,
         "insertion and recording tableaux must have equal shapes");
  }
  const int n = p.num_cells();
  auto p_rows = p.rows();
  auto q_rows = q.rows();
  std::vector<std::pair<int, int>> pairs(n);
  for (int step = n; step >= 1; --step) {
    // Largest remaining recording entry; among equal entries the one in
    // the rightmost column was recorded last, so it is undone first.
    int best_row = -1, best_col = -1, best_u = -1;
    for (size_t r = 0; r < q_rows.size(); ++r) {
      if (q_rows[r].empty()) continue;
      const int c = static_cast<int>(q_rows[r].size());
      const int u = q_rows[r].back();
      if (u > best_u || (u == best_u && c > best_col)) {
        best_u = u;
        best_row = static_cast<int>(r) + 1;
        best_col = c;
      }
    }
    // The chosen cell must be a corner of the current shape; otherwise Q
    // admits no recording order.
    if (best_row < static_cast<int>(q_rows.size()) &&
        static_cast<int>(q_rows[best_row].size()) >= best_col) {
      fail(ErrorKind::NotARecordingTableau,
           "recording tableau admits no valid un-insertion order");
    }
    q_rows[best_row - 1].pop_back();
    if (q_rows[best_row - 1].empty()) q_rows.pop_back();
    const int v = uninsert_from_rows(p_rows, best_row, best_col);
    pairs[step - 1] = {best_u, v};
  }
  return TwoLineArray::from_pairs(std::move(pairs));
}

TwoLineArray perm_to_array(const Permutation &perm) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(perm.size());
  for (int i = 1; i <= perm.size(); ++i) pairs.emplace_back(i, perm.at(i));
  return TwoLineArray::from_pairs(std::move(pairs));
}

MultiplicityMatrix array_to_matrix(const TwoLineArray &array, int rows,
                                   int cols) {
  int max_u = 1, max_v = 1;
  for (const auto &[u, v] : array.pairs()) {
    max_u = std::max(max_u, u);
    max_v = std::max(max_v, v);
  }
  if (rows == 0) rows = max_u;
  if (cols == 0) cols = max_v;
  if (rows < max_u || cols < max_v) {
    fail(ErrorKind::DimsTooSmall,
         "matrix dimensions do not cover the array's index range");
  }
  auto matrix = MultiplicityMatrix::zero(rows, cols);
  for (const auto &[u, v] : array.pairs()) ++matrix.entry_ref(u, v);
  return matrix;
}

TwoLineArray matrix_to_array(const MultiplicityMatrix &matrix) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= matrix.rows(); ++i) {
    for (int j = 1; j <= matrix.cols(); ++j) {
      for (long m = 0; m < matrix.entry(i, j); ++m) pairs.emplace_back(i, j);
    }
  }
  return TwoLineArray::from_pairs(std::move(pairs));
}

}  // namespace permtab
