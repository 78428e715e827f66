#include "core.hpp"

#include <algorithm>
#include <cassert>

namespace permtab {

Permutation Permutation::from_word(std::vector<int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> inverse(word.size(), 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int value = word[pos - 1];
    if (value < 1 || value > n) {
      fail(ErrorKind::NotABijection,
           "permutation word contains " + std::to_string(value) +
               ", expected values 1.." + std::to_string(n));
    }
    if (inverse[value - 1] != 0) {
      fail(ErrorKind::NotABijection, "permutation word repeats the value " +
                                         std::to_string(value));
    }
    inverse[value - 1] = pos;
  }
  Permutation p;
  p.word_ = std::move(word);
  p.inverse_ = std::move(inverse);
  return p;
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  return from_word(std::move(word));
}

Partition Partition::from_parts(std::vector<int> parts) {
  int weight = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) {
      fail(ErrorKind::InvalidArgument,
           "partition parts must be positive, got " +
               std::to_string(parts[i]));
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      fail(ErrorKind::InvalidArgument,
           "partition parts must be weakly decreasing");
    }
    weight += parts[i];
  }
  Partition p;
  p.parts_ = std::move(parts);
  p.weight_ = weight;
  return p;
}

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>> &rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto &row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition::from_parts(std::move(parts));
}

void validate_generalized(const std::vector<std::vector<int>> &rows) {
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) {
      fail(ErrorKind::InvalidArgument, "tableau has an empty row");
    }
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      fail(ErrorKind::InvalidArgument,
           "tableau row lengths must weakly decrease");
    }
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) {
        fail(ErrorKind::InvalidArgument, "tableau entries must be positive");
      }
      if (c > 0 && rows[r][c] < rows[r][c - 1]) {
        fail(ErrorKind::InvalidArgument,
             "tableau rows must weakly increase");
      }
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) {
        fail(ErrorKind::InvalidArgument,
             "tableau columns must strictly increase");
      }
    }
  }
}

}  // namespace

GeneralizedTableau GeneralizedTableau::from_rows(
    std::vector<std::vector<int>> rows) {
  validate_generalized(rows);
  GeneralizedTableau t;
  t.rows_ = std::move(rows);
  return t;
}

GeneralizedTableau GeneralizedTableau::unchecked(
    std::vector<std::vector<int>> rows) {
#ifndef NDEBUG
  validate_generalized(rows);
#endif
  GeneralizedTableau t;
  t.rows_ = std::move(rows);
  return t;
}

int GeneralizedTableau::num_cells() const {
  int total = 0;
  for (const auto &row : rows_) total += static_cast<int>(row.size());
  return total;
}

Partition GeneralizedTableau::shape() const { return shape_of_rows(rows_); }

namespace {

void validate_standard(const std::vector<std::vector<int>> &rows) {
  int n = 0;
  for (const auto &row : rows) n += static_cast<int>(row.size());
  std::vector<bool> seen(n, false);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      const int value = rows[r][c];
      if (value < 1 || value > n || seen[value - 1]) {
        fail(ErrorKind::InvalidArgument,
             "standard tableau entries must be exactly 1.." +
                 std::to_string(n) + " without repeats");
      }
      seen[value - 1] = true;
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) {
        fail(ErrorKind::InvalidArgument,
             "standard tableau rows must strictly increase");
      }
    }
  }
}

}  // namespace

StandardTableau StandardTableau::from_rows(
    std::vector<std::vector<int>> rows) {
  validate_standard(rows);
  StandardTableau t;
  t.tableau_ = GeneralizedTableau::from_rows(std::move(rows));
  return t;
}

StandardTableau StandardTableau::unchecked(
    std::vector<std::vector<int>> rows) {
#ifndef NDEBUG
  validate_standard(rows);
#endif
  StandardTableau t;
  t.tableau_ = GeneralizedTableau::unchecked(std::move(rows));
  return t;
}

TwoLineArray TwoLineArray::from_pairs(
    std::vector<std::pair<int, int>> pairs) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first < 1 || pairs[i].second < 1) {
      fail(ErrorKind::InvalidArgument,
           "two-line array entries must be positive");
    }
    if (i > 0 && pairs[i] < pairs[i - 1]) {
      fail(ErrorKind::NotLexSorted,
           "two-line array pairs must be in weakly increasing "
           "lexicographic order");
    }
  }
  TwoLineArray a;
  a.pairs_ = std::move(pairs);
  return a;
}

MultiplicityMatrix MultiplicityMatrix::from_entries(
    std::vector<std::vector<long>> entries) {
  const size_t cols = entries.empty() ? 0 : entries[0].size();
  for (const auto &row : entries) {
    if (row.size() != cols) {
      fail(ErrorKind::InvalidArgument,
           "multiplicity matrix rows must have equal length");
    }
    for (long v : row) {
      if (v < 0) {
        fail(ErrorKind::InvalidArgument,
             "multiplicity matrix entries must be nonnegative");
      }
    }
  }
  MultiplicityMatrix m;
  m.entries_ = std::move(entries);
  return m;
}

MultiplicityMatrix MultiplicityMatrix::zero(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
  }
  MultiplicityMatrix m;
  m.entries_.assign(rows, std::vector<long>(cols, 0));
  return m;
}

Count factorial(int n) {
  if (n < 0) fail(ErrorKind::OutOfRange, "factorial of a negative number");
  Count result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

namespace {

void emit_partitions(int remaining, int max_part, int parts_left,
                     std::vector<int> &prefix,
                     std::vector<Partition> &out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(prefix));
    return;
  }
  if (parts_left == 0) return;
  // Largest first part yields reverse-lexicographic emission order.
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // The remaining parts are at most p each, so p*parts_left must cover.
    if (static_cast<long>(p) * parts_left < remaining) break;
    prefix.push_back(p);
    emit_partitions(remaining - p, p, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n, int max_parts) {
  if (n < 1 || max_parts < 1) {
    fail(ErrorKind::OutOfRange,
         "partitions requires n >= 1 and max_parts >= 1");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, max_parts, prefix, out);
  return out;
}

}  // namespace permtab
