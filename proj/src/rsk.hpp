#pragma once

#include "core.hpp"

namespace permtab {

struct InsertResult {
  GeneralizedTableau tableau;
  int row = 0;  // 1-based cell where the appended value landed
  int col = 0;
};

// Row insertion: append x to row 1 if it is >= the rightmost entry there,
// otherwise bump the least entry y > x and carry y into the next row.
InsertResult schensted_insert(const GeneralizedTableau &tableau, int x);

struct TableauPair {
  StandardTableau p;
  StandardTableau q;
};

struct GeneralizedPair {
  GeneralizedTableau p;
  GeneralizedTableau q;
};

// Insertion tableau P from successive insertion of the word, recording
// tableau Q holding i at the cell created by step i.
TableauPair rsk_forward(const Permutation &perm);

// The unique permutation mapping to (P, Q); reverse bumping driven by
// locating n, n-1, ..., 1 in Q.
Permutation rsk_inverse(const StandardTableau &p, const StandardTableau &q);

GeneralizedPair knuth_forward(const TwoLineArray &array);

TwoLineArray knuth_inverse(const GeneralizedTableau &p,
                           const GeneralizedTableau &q);

// (1, pi(1)), ..., (n, pi(n)).
TwoLineArray perm_to_array(const Permutation &perm);

// Entry (i, j) counts the pairs (i, j) in the array.  rows = cols = 0
// derives the smallest covering dimensions (at least 1x1).
MultiplicityMatrix array_to_matrix(const TwoLineArray &array, int rows = 0,
                                   int cols = 0);

// Emits each pair (i, j) with its multiplicity, in lexicographic order.
TwoLineArray matrix_to_array(const MultiplicityMatrix &matrix);

}  // namespace permtab
