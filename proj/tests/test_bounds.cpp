#include <doctest.h>

#include "bounds.hpp"

using namespace permtab;

namespace {

Exact rational(long num, long den) {
  return make_exact(Count(num), Count(den));
}

}  // namespace

TEST_CASE("xi bound values") {
  CHECK(xi_bound(4, 2) == rational(256, 1));
  CHECK(xi_bound(7, 1) == rational(1, 1));
  CHECK(xi_bound(3, 3) == rational(729, 4));
}

TEST_CASE("epsilon bound values") {
  CHECK(epsilon_bound(3, 2) == rational(16, 1));
  CHECK(epsilon_bound(3, 1) == rational(1, 1));
  CHECK(epsilon_bound(3, 3) == rational(1, 1));  // second branch, k = n
  CHECK(epsilon_bound(5, 5) == rational(1, 1));
  try {
    epsilon_bound(3, 4);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  CHECK_THROWS_AS(epsilon_bound(3, 0), Error);
}

TEST_CASE("beth bound values") {
  CHECK(beth_bound(4, 2) == rational(16, 1));
  CHECK(beth_bound(9, 1) == rational(1, 1));
  CHECK(beth_bound(3, 3) == rational(27, 2));
}

TEST_CASE("multilinear bound and exact count") {
  CHECK(multilinear_exact(4, 2, 1) == 6);
  CHECK(multilinear_bound(4, 2, 1) == rational(6, 1));  // met with equality
  CHECK(multilinear_exact(9, 1, 4) == 9);
  CHECK_THROWS_AS(multilinear_bound(3, 4, 1), Error);
  CHECK_THROWS_AS(multilinear_exact(3, 4, 1), Error);
}

TEST_CASE("small sweeps stay under the bounds") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(Exact(xi_brute(n, k)) <= xi_bound(n, k));
    }
  }
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(Exact(beth_exact(n, k)) <= beth_bound(n, k));
    }
  }
}

TEST_CASE("verification harness") {
  VerifyOptions options;
  options.max_n = 5;
  const auto report = verify(options);
  CHECK(report.all_pass);

  bool found_xi = false, found_epsilon = false;
  Count epsilon_at_most_3;
  for (const auto &row : report.rows) {
    CHECK(row.pass);
    CHECK(row.bound > 0);
    if (row.exact > 0) {
      CHECK(row.ratio > 0);
      CHECK(row.ratio <= 1);
    }
    if (row.statistic == "xi" && row.n == 4 && row.k == 2) {
      found_xi = true;
      CHECK(row.exact == 14);
      CHECK(row.bound == rational(256, 1));
      CHECK(row.ratio == rational(7, 128));
    }
    if (row.statistic == "epsilon" && row.n == 3 && row.k == 2) {
      found_epsilon = true;
      CHECK(row.exact == 3);
      CHECK(row.bound == rational(16, 1));
      CHECK(row.has_at_most);
      CHECK(row.exact_at_most == 4);  // classes with antichain <= 2
    }
  }
  CHECK(found_xi);
  CHECK(found_epsilon);

  // Every statistic covers the full (n, k) grid.
  long xi_rows = 0, epsilon_rows = 0, beth_rows = 0;
  for (const auto &row : report.rows) {
    if (row.statistic == "xi") ++xi_rows;
    if (row.statistic == "epsilon") ++epsilon_rows;
    if (row.statistic == "beth") ++beth_rows;
  }
  CHECK(xi_rows == 15);  // sum over n <= 5 of n
  CHECK(epsilon_rows == 15);
  CHECK(beth_rows == 15);
}

TEST_CASE("verification propagates guard violations") {
  VerifyOptions options;
  options.max_n = 8;  // census guard is 7
  try {
    verify(options);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
  }
}
