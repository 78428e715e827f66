#include "genfunc.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace permtab {

TruncatedSeries::TruncatedSeries(int degree) : degree_(degree) {
  if (degree < 0) fail(ErrorKind::OutOfRange, "degree must be nonnegative");
  coeffs_.assign(degree + 1, Exact(0));
}

TruncatedSeries TruncatedSeries::constant(const Exact &value, int degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Exact &value, int power,
                                          int degree) {
  TruncatedSeries s(degree);
  if (power < 0) fail(ErrorKind::OutOfRange, "power must be nonnegative");
  if (power <= degree) s.coeffs_[power] = value;
  return s;
}

void TruncatedSeries::set_coeff(int i, Exact value) {
  if (i < 0 || i > degree_) {
    fail(ErrorKind::OutOfRange, "coefficient index out of range");
  }
  coeffs_[i] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
  for (const auto &c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

namespace {

void require_same_degree(const TruncatedSeries &a, const TruncatedSeries &b) {
  if (a.degree() != b.degree()) {
    fail(ErrorKind::DegreeMismatch,
         "series truncation degrees differ: " + std::to_string(a.degree()) +
             " vs " + std::to_string(b.degree()));
  }
}

}  // namespace

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other) {
  require_same_degree(*this, other);
  for (int i = 0; i <= degree_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other) {
  require_same_degree(*this, other);
  for (int i = 0; i <= degree_; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  require_same_degree(a, b);
  const int degree = a.degree();
  TruncatedSeries product(degree);
  for (int i = 0; i <= degree; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= degree; ++j) {
      if (b.coeff(j) == 0) continue;
      product.coeffs_[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return product;
}

namespace {

using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

// Quotient of s by t when t has an invertible constant term; exact to the
// shared truncation degree.
TruncatedSeries series_div_by_unit(const TruncatedSeries &s,
                                   const TruncatedSeries &t) {
  require_same_degree(s, t);
  assert(t.coeff(0) != 0);
  const int degree = s.degree();
  TruncatedSeries q(degree);
  for (int i = 0; i <= degree; ++i) {
    Exact acc = s.coeff(i);
    for (int j = 0; j < i; ++j) acc -= q.coeff(j) * t.coeff(i - j);
    q.set_coeff(i, acc / t.coeff(0));
  }
  return q;
}

template <class Ring>
Ring det_cofactor(const std::vector<std::vector<Ring>> &m, Ring zero,
                  Ring one) {
  const size_t k = m.size();
  if (k == 0) return one;
  if (k == 1) return m[0][0];
  Ring total = zero;
  for (size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Ring>> minor;
    minor.reserve(k - 1);
    for (size_t r = 1; r < k; ++r) {
      std::vector<Ring> row;
      row.reserve(k - 1);
      for (size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Ring term = m[0][j] * det_cofactor(minor, zero, one);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Division-free expansion with memoization over column subsets; the
// general fallback when elimination has no usable pivot.
TruncatedSeries det_minor_expansion(const SeriesMatrix &m, int degree) {
  const int k = static_cast<int>(m.size());
  // f[S] = det of the first popcount(S) rows restricted to columns S.
  std::vector<TruncatedSeries> f(size_t{1} << k, TruncatedSeries(degree));
  f[0] = TruncatedSeries::constant(Exact(1), degree);
  for (unsigned s = 1; s < (1u << k); ++s) {
    const int row = __builtin_popcount(s) - 1;
    TruncatedSeries acc(degree);
    int seen = 0;
    for (int c = 0; c < k; ++c) {
      if (!(s & (1u << c))) continue;
      if (!m[row][c].is_zero()) {
        TruncatedSeries term = m[row][c] * f[s & ~(1u << c)];
        if ((__builtin_popcount(s) - 1 - seen) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++seen;
    }
    f[s] = std::move(acc);
  }
  return f[(1u << k) - 1];
}

// One-step fraction-free elimination; the divisions are exact because
// every working entry is a minor of the (row-swapped) input.  Pivots need
// an invertible constant term; when none exists the untouched matrix goes
// through the division-free expansion instead.
TruncatedSeries det_bareiss(const SeriesMatrix &input, int degree) {
  SeriesMatrix m = input;
  const int k = static_cast<int>(m.size());
  TruncatedSeries prev_pivot = TruncatedSeries::constant(Exact(1), degree);
  int sign = 1;
  for (int step = 0; step < k - 1; ++step) {
    int pivot_row = -1;
    for (int r = step; r < k; ++r) {
      if (m[r][step].coeff(0) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) return det_minor_expansion(input, degree);
    if (pivot_row != step) {
      std::swap(m[pivot_row], m[step]);
      sign = -sign;
    }
    for (int r = step + 1; r < k; ++r) {
      for (int c = step + 1; c < k; ++c) {
        TruncatedSeries numerator =
            m[step][step] * m[r][c] - m[r][step] * m[step][c];
        m[r][c] = series_div_by_unit(numerator, prev_pivot);
      }
      m[r][step] = TruncatedSeries(degree);
    }
    prev_pivot = m[step][step];
  }
  TruncatedSeries result = m[k - 1][k - 1];
  if (sign < 0) {
    result = TruncatedSeries(degree) - result;
  }
  return result;
}

}  // namespace

TruncatedSeries series_det(const SeriesMatrix &matrix) {
  const size_t k = matrix.size();
  if (k == 0) {
    fail(ErrorKind::InvalidArgument, "determinant of an empty matrix");
  }
  const int degree = matrix[0][0].degree();
  for (const auto &row : matrix) {
    if (row.size() != k) {
      fail(ErrorKind::InvalidArgument, "determinant needs a square matrix");
    }
    for (const auto &entry : row) {
      if (entry.degree() != degree) {
        fail(ErrorKind::DegreeMismatch,
             "determinant entries must share one truncation degree");
      }
    }
  }
  if (k <= 6) {
    return det_cofactor(matrix, TruncatedSeries(degree),
                        TruncatedSeries::constant(Exact(1), degree));
  }
  return det_bareiss(matrix, degree);
}

TruncatedSeries bessel_b(int index, int degree) {
  if (index < 0) fail(ErrorKind::OutOfRange, "index must be nonnegative");
  TruncatedSeries s(degree);
  for (int m = 0; 2 * m + index <= degree; ++m) {
    s.set_coeff(2 * m + index,
                make_exact(Count(1), factorial(m) * factorial(m + index)));
  }
  return s;
}

TruncatedSeries gessel_U(int k, int degree) {
  if (k < 1) fail(ErrorKind::OutOfRange, "requires k >= 1");
  SeriesMatrix matrix(k, std::vector<TruncatedSeries>());
  for (int i = 1; i <= k; ++i) {
    matrix[i - 1].reserve(k);
    for (int j = 1; j <= k; ++j) {
      matrix[i - 1].push_back(bessel_b(std::abs(i - j), degree));
    }
  }
  return series_det(matrix);
}

Count xi_from_series(int k, int n) {
  if (k < 1 || n < 0) fail(ErrorKind::OutOfRange, "requires k >= 1, n >= 0");
  const TruncatedSeries u = gessel_U(k, 2 * n);
  const Count f = factorial(n);
  const Exact value = Exact(f * f) * u.coeff(2 * n);
  if (value.get_den() != 1 || value.get_num() < 0) {
    fail(ErrorKind::NonIntegerResult,
         "series coefficient did not scale to a nonnegative integer");
  }
  return value.get_num();
}

MultiPoly MultiPoly::constant(const Exact &value, int num_vars) {
  MultiPoly p(num_vars);
  if (value != 0) p.terms_.emplace(std::vector<int>(num_vars, 0), value);
  return p;
}

MultiPoly MultiPoly::variable(int index, int num_vars) {
  if (index < 1 || index > num_vars) {
    fail(ErrorKind::OutOfRange, "variable index out of range");
  }
  MultiPoly p(num_vars);
  std::vector<int> exponents(num_vars, 0);
  exponents[index - 1] = 1;
  p.terms_.emplace(std::move(exponents), Exact(1));
  return p;
}

Exact MultiPoly::coeff(const std::vector<int> &exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Exact(0) : it->second;
}

void MultiPoly::add_term(std::vector<int> exponents, const Exact &value) {
  if (static_cast<int>(exponents.size()) != num_vars_) {
    fail(ErrorKind::InvalidArgument, "exponent vector length mismatch");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

MultiPoly MultiPoly::lifted(int new_num_vars, int offset) const {
  if (offset < 0 || offset + num_vars_ > new_num_vars) {
    fail(ErrorKind::OutOfRange, "lift target does not fit the variables");
  }
  MultiPoly out(new_num_vars);
  for (const auto &[exponents, value] : terms_) {
    std::vector<int> shifted(new_num_vars, 0);
    for (int v = 0; v < num_vars_; ++v) {
      if (exponents[v] != 0) shifted[v + offset] = exponents[v];
    }
    out.terms_.emplace(std::move(shifted), value);
  }
  return out;
}

namespace {

void require_same_vars(const MultiPoly &a, const MultiPoly &b) {
  if (a.num_vars() != b.num_vars()) {
    fail(ErrorKind::DegreeMismatch,
         "polynomials are over different variable counts");
  }
}

}  // namespace

MultiPoly &MultiPoly::operator+=(const MultiPoly &other) {
  require_same_vars(*this, other);
  for (const auto &[exponents, value] : other.terms_) {
    add_term(exponents, value);
  }
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &other) {
  require_same_vars(*this, other);
  for (const auto &[exponents, value] : other.terms_) {
    add_term(exponents, -value);
  }
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  require_same_vars(a, b);
  MultiPoly product(a.num_vars());
  std::vector<int> exponents(a.num_vars());
  for (const auto &[ea, ca] : a.terms()) {
    for (const auto &[eb, cb] : b.terms()) {
      for (int v = 0; v < a.num_vars(); ++v) exponents[v] = ea[v] + eb[v];
      product.add_term(exponents, ca * cb);
    }
  }
  return product;
}

namespace {

void emit_monomials(int remaining, int var, int num_vars,
                    std::vector<int> &exponents, MultiPoly &out) {
  if (var == num_vars - 1) {
    exponents[var] = remaining;
    out.add_term(exponents, Exact(1));
    exponents[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exponents[var] = e;
    emit_monomials(remaining - e, var + 1, num_vars, exponents, out);
  }
  exponents[var] = 0;
}

}  // namespace

MultiPoly complete_homogeneous(int d, int num_vars) {
  if (num_vars < 1) fail(ErrorKind::OutOfRange, "needs at least 1 variable");
  MultiPoly h(num_vars);
  if (d < 0) return h;
  if (d == 0) return MultiPoly::constant(Exact(1), num_vars);
  std::vector<int> exponents(num_vars, 0);
  emit_monomials(d, 0, num_vars, exponents, h);
  return h;
}

MultiPoly schur(const Partition &shape, int num_vars) {
  const int m = shape.num_parts();
  if (m == 0) return MultiPoly::constant(Exact(1), num_vars);
  std::vector<std::vector<MultiPoly>> matrix(
      m, std::vector<MultiPoly>(m, MultiPoly(num_vars)));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      matrix[i - 1][j - 1] =
          complete_homogeneous(shape.part(i) + j - i, num_vars);
    }
  }
  return det_cofactor(matrix, MultiPoly(num_vars),
                      MultiPoly::constant(Exact(1), num_vars));
}

Count syt_count_schur(const Partition &shape, int guard) {
  const int n = shape.weight();
  if (n > guard) {
    fail(ErrorKind::GuardExceeded,
         "Schur expansion of weight " + std::to_string(n) +
             " exceeds the guard of " + std::to_string(guard));
  }
  if (n == 0) return 1;
  const MultiPoly s = schur(shape, n);
  const Exact c = s.coeff(std::vector<int>(n, 1));
  if (c.get_den() != 1 || c.get_num() < 0) {
    fail(ErrorKind::Internal, "squarefree Schur coefficient not integral");
  }
  return c.get_num();
}

Count rk_coefficient(int k, int n, int guard) {
  if (k < 1 || n < 1) fail(ErrorKind::OutOfRange, "requires k, n >= 1");
  if (n > guard) {
    fail(ErrorKind::GuardExceeded,
         "two-alphabet expansion of degree " + std::to_string(n) +
             " exceeds the guard of " + std::to_string(guard));
  }
  MultiPoly total(2 * n);
  for (const Partition &shape : partitions(n, std::min(n, k))) {
    const MultiPoly s = schur(shape, n);
    total += s.lifted(2 * n, 0) * s.lifted(2 * n, n);
  }
  const Exact c = total.coeff(std::vector<int>(2 * n, 1));
  if (c.get_den() != 1 || c.get_num() < 0) {
    fail(ErrorKind::Internal, "two-alphabet coefficient not integral");
  }
  return c.get_num();
}

}  // namespace permtab
