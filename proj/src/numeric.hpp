#pragma once

#include <gmpxx.h>

#include <string>

namespace permtab {

// Exact integer counts.  Every counting result in the library is one of
// these; machine words overflow immediately (k^{2n} and friends).
using Count = mpz_class;

// Exact rationals in lowest terms; bound formulas and series coefficients.
using Exact = mpq_class;

inline Exact make_exact(const Count &num, const Count &den) {
  Exact q(num, den);
  q.canonicalize();
  return q;
}

inline std::string decimal(const Count &value) { return value.get_str(); }

inline std::string decimal_num(const Exact &value) {
  return value.get_num().get_str();
}

inline std::string decimal_den(const Exact &value) {
  return value.get_den().get_str();
}

}  // namespace permtab
