#pragma once

#include <map>
#include <vector>

#include "core.hpp"

namespace permtab {

inline constexpr int kDefaultSchurGuard = 6;
inline constexpr int kDefaultRkGuard = 4;

// Univariate power series with exact rational coefficients, truncated at a
// fixed degree D.  Arithmetic never consults degrees above D; operands
// must agree on D.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree);
  static TruncatedSeries constant(const Exact &value, int degree);
  static TruncatedSeries monomial(const Exact &value, int power, int degree);

  int degree() const { return degree_; }
  const Exact &coeff(int i) const { return coeffs_[i]; }
  void set_coeff(int i, Exact value);
  bool is_zero() const;

  TruncatedSeries &operator+=(const TruncatedSeries &other);
  TruncatedSeries &operator-=(const TruncatedSeries &other);
  friend TruncatedSeries operator+(TruncatedSeries a,
                                   const TruncatedSeries &b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a,
                                   const TruncatedSeries &b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries &a,
                                   const TruncatedSeries &b);
  bool operator==(const TruncatedSeries &) const = default;

 private:
  int degree_ = 0;
  std::vector<Exact> coeffs_;  // c_0 .. c_D
};

// Exact determinant over the truncated-series ring: cofactor expansion up
// to 6x6, one-step fraction-free elimination above (falling back to
// minor-expansion when no pivot with invertible constant term exists).
TruncatedSeries series_det(
    const std::vector<std::vector<TruncatedSeries>> &matrix);

// sum_{m >= 0} x^{2m+i} / (m! (m+i)!), truncated at the given degree.
TruncatedSeries bessel_b(int index, int degree);

// det(b_{|i-j|}) over a k x k grid.
TruncatedSeries gessel_U(int k, int degree);

// (n!)^2 times the coefficient of x^{2n} in U_k; checked integral.
Count xi_from_series(int k, int n);

// Multivariate polynomial over a fixed variable count with exact rational
// coefficients; exponent vectors index the terms.
class MultiPoly {
 public:
  explicit MultiPoly(int num_vars) : num_vars_(num_vars) {}
  static MultiPoly constant(const Exact &value, int num_vars);
  static MultiPoly variable(int index, int num_vars);  // 1-based index

  int num_vars() const { return num_vars_; }
  const std::map<std::vector<int>, Exact> &terms() const { return terms_; }
  Exact coeff(const std::vector<int> &exponents) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(std::vector<int> exponents, const Exact &value);

  // Re-embeds into a wider variable set, shifting variables by `offset`.
  MultiPoly lifted(int new_num_vars, int offset) const;

  MultiPoly &operator+=(const MultiPoly &other);
  MultiPoly &operator-=(const MultiPoly &other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) {
    return a += b;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) {
    return a -= b;
  }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  bool operator==(const MultiPoly &) const = default;

 private:
  int num_vars_ = 0;
  std::map<std::vector<int>, Exact> terms_;  // no zero coefficients stored
};

// All degree-d monomials in the given variables, each with coefficient 1.
// d = 0 gives 1; d < 0 gives 0.
MultiPoly complete_homogeneous(int d, int num_vars);

// Jacobi-Trudi determinant det(h_{lambda_i + j - i}).
MultiPoly schur(const Partition &shape, int num_vars);

// Coefficient of x_1 x_2 ... x_n in schur(shape, n).
Count syt_count_schur(const Partition &shape,
                      int guard = kDefaultSchurGuard);

// Coefficient of x_1...x_n y_1...y_n in the bidegree-(n, n) part of
// sum_{lambda, at most k parts} s_lambda(x) s_lambda(y), by direct
// polynomial multiplication.
Count rk_coefficient(int k, int n, int guard = kDefaultRkGuard);

}  // namespace permtab
