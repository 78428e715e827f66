#include "bounds.hpp"

#include <algorithm>

namespace permtab {

namespace {

Count int_pow(int base, int exponent) {
  Count result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace

Exact xi_bound(int n, int k) {
  if (n < 1 || k < 1) fail(ErrorKind::OutOfRange, "requires n, k >= 1");
  const Count f = factorial(k - 1);
  return make_exact(int_pow(k, 2 * n), f * f);
}

Exact epsilon_bound(int n, int k) {
  if (k < 1 || k > n) {
    fail(ErrorKind::OutOfRange,
         "antichain size must satisfy 1 <= k <= n");
  }
  const Count fk = factorial(k);
  const Exact first = make_exact(int_pow(k, 2 * n), fk * fk);
  const Count fc = factorial(n - k);
  const Exact second = make_exact(int_pow(n - k + 1, 2 * n), fc * fc);
  return std::min(first, second);
}

Exact beth_bound(int n, int k) {
  if (n < 1 || k < 1) fail(ErrorKind::OutOfRange, "requires n, k >= 1");
  return make_exact(int_pow(k, n), factorial(k - 1));
}

Exact multilinear_bound(int l, int n, int k) {
  if (n > l) fail(ErrorKind::OutOfRange, "word length must not exceed l");
  return Exact(binomial(l, n)) * xi_bound(n, k);
}

Count multilinear_exact(int l, int n, int k) {
  if (n > l) fail(ErrorKind::OutOfRange, "word length must not exceed l");
  return binomial(l, n) * xi_shapes(n, k);
}

namespace {

void push_row(BoundsReport &report, std::string statistic, int n, int k,
              Count exact, Exact bound, std::string method) {
  BoundsRow row;
  row.statistic = std::move(statistic);
  row.n = n;
  row.k = k;
  row.ratio = Exact(exact) / bound;
  row.pass = exact <= bound;
  row.exact = std::move(exact);
  row.bound = std::move(bound);
  row.method = std::move(method);
  report.all_pass = report.all_pass && row.pass;
  report.rows.push_back(std::move(row));
}

}  // namespace

BoundsReport verify(const VerifyOptions &options) {
  BoundsReport report;
  const int max_n = options.max_n;
  if (max_n < 1) fail(ErrorKind::OutOfRange, "verification needs max_n >= 1");

  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n <= options.brute_guard) {
        push_row(report, "xi", n, k,
                 xi_brute(n, k, options.brute_guard, options.threads),
                 xi_bound(n, k), "brute");
      } else {
        push_row(report, "xi", n, k, xi_shapes(n, k), xi_bound(n, k),
                 "shapes");
      }
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    const auto census =
        epsilon_exact(n, options.epsilon_guard, options.threads);
    Count at_most = 0;
    for (int k = 1; k <= n; ++k) {
      const auto it = census.find(k);
      Count exact = it == census.end() ? Count(0) : it->second;
      at_most += exact;
      push_row(report, "epsilon", n, k, std::move(exact),
               epsilon_bound(n, k), "census");
      report.rows.back().has_at_most = true;
      report.rows.back().exact_at_most = at_most;
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      push_row(report, "beth", n, k, beth_exact(n, k), beth_bound(n, k),
               "shapes");
    }
  }

  const int max_l = options.max_l > 0 ? options.max_l : max_n;
  for (int l = 1; l <= max_l; ++l) {
    for (int n = 1; n <= l; ++n) {
      for (int k = 1; k <= n; ++k) {
        push_row(report, "multilinear[l=" + std::to_string(l) + "]", n, k,
                 multilinear_exact(l, n, k), multilinear_bound(l, n, k),
                 "shapes");
      }
    }
  }

  return report;
}

}  // namespace permtab
