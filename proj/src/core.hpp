#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace permtab {

// A permutation of 1..n in one-line notation x_1 x_2 ... x_n.  Positions
// and values are both 1-based.  The empty permutation (n = 0) is allowed.
class Permutation {
 public:
  Permutation() = default;

  // Validates that word contains each of 1..n exactly once.
  static Permutation from_word(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int> &word() const { return word_; }

  // Value at 1-based position.
  int at(int position) const { return word_[position - 1]; }

  // 1-based position of a value.
  int position_of(int value) const { return inverse_[value - 1]; }

  bool operator==(const Permutation &) const = default;

 private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

// A weakly decreasing sequence of positive parts.  The empty partition is
// the shape of the empty tableau.
class Partition {
 public:
  Partition() = default;

  static Partition from_parts(std::vector<int> parts);

  int num_parts() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i - 1]; }  // 1-based
  const std::vector<int> &parts() const { return parts_; }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition &) const = default;
  auto operator<=>(const Partition &other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Positive integer filling with weakly increasing rows and strictly
// increasing columns (column-strict).  Row lengths weakly decrease.
class GeneralizedTableau {
 public:
  GeneralizedTableau() = default;

  static GeneralizedTableau from_rows(std::vector<std::vector<int>> rows);

  // Construction bypass for algorithms that maintain the invariants
  // themselves (insertion paths).  Checked in debug builds.
  static GeneralizedTableau unchecked(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>> &rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cells() const;
  bool empty() const { return rows_.empty(); }
  Partition shape() const;

  // 1-based cell access.
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }

  bool operator==(const GeneralizedTableau &) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Filling with exactly the entries 1..n, strictly increasing along rows
// and down columns.
class StandardTableau {
 public:
  StandardTableau() = default;

  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  static StandardTableau unchecked(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>> &rows() const {
    return tableau_.rows();
  }
  int num_rows() const { return tableau_.num_rows(); }
  int num_cells() const { return tableau_.num_cells(); }
  bool empty() const { return tableau_.empty(); }
  Partition shape() const { return tableau_.shape(); }
  int at(int row, int col) const { return tableau_.at(row, col); }

  // Standard tableaux are the repeat-free special case.
  const GeneralizedTableau &as_generalized() const { return tableau_; }

  bool operator==(const StandardTableau &) const = default;

 private:
  GeneralizedTableau tableau_;
};

// Pairs (u_i, v_i) of positive integers in weakly increasing lexicographic
// order.
class TwoLineArray {
 public:
  TwoLineArray() = default;

  static TwoLineArray from_pairs(std::vector<std::pair<int, int>> pairs);

  int length() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>> &pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  bool operator==(const TwoLineArray &) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Rectangular grid of nonnegative multiplicities.
class MultiplicityMatrix {
 public:
  MultiplicityMatrix() = default;

  static MultiplicityMatrix from_entries(
      std::vector<std::vector<long>> entries);
  static MultiplicityMatrix zero(int rows, int cols);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const {
    return entries_.empty() ? 0 : static_cast<int>(entries_[0].size());
  }
  long entry(int i, int j) const { return entries_[i - 1][j - 1]; }
  long &entry_ref(int i, int j) { return entries_[i - 1][j - 1]; }
  const std::vector<std::vector<long>> &entries() const { return entries_; }

  bool operator==(const MultiplicityMatrix &) const = default;

 private:
  std::vector<std::vector<long>> entries_;
};

Count factorial(int n);

// 0 when k < 0 or k > n.
Count binomial(int n, int k);

// All partitions of n with at most max_parts parts, in reverse-lexicographic
// order of the part sequences.  Requires n >= 1 and max_parts >= 1.
std::vector<Partition> partitions(int n, int max_parts);

}  // namespace permtab
