#include "permtab/permtab.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include "bounds.hpp"
#include "counting.hpp"
#include "genfunc.hpp"
#include "json_io.hpp"
#include "posets.hpp"
#include "rsk.hpp"
#include "stats.hpp"

using namespace permtab;

struct permtab_ctx {
  // Enumeration guards, overridable per context.
  int brute_guard = kDefaultBruteGuard;
  int epsilon_guard = kDefaultEpsilonGuard;
  int canonical_guard = kDefaultCanonicalGuard;
  int syt_enumerate_guard = kDefaultEnumerationGuard;
  int schur_guard = kDefaultSchurGuard;
  int rk_guard = kDefaultRkGuard;
  int threads = 1;

  std::string last_error;
  std::string last_error_kind;
};

namespace {

permtab_status record_error(permtab_ctx *ctx, ErrorKind kind,
                            const std::string &message) {
  if (ctx) {
    ctx->last_error = message;
    ctx->last_error_kind = error_kind_name(kind);
  }
  switch (kind) {
    case ErrorKind::GuardExceeded:
      return PERMTAB_ERR_GUARD;
    case ErrorKind::Internal:
    case ErrorKind::NonIntegerResult:
      return PERMTAB_ERR_INTERNAL;
    default:
      return PERMTAB_ERR_INVALID;
  }
}

template <class Fn>
permtab_status guarded(permtab_ctx *ctx, Fn &&fn) {
  if (!ctx) return PERMTAB_ERR_INVALID;
  ctx->last_error.clear();
  ctx->last_error_kind.clear();
  try {
    fn();
    return PERMTAB_OK;
  } catch (const Error &e) {
    return record_error(ctx, e.kind(), e.what());
  } catch (const std::bad_alloc &) {
    if (ctx) {
      ctx->last_error = "out of memory";
      ctx->last_error_kind = "OutOfMemory";
    }
    return PERMTAB_ERR_NOMEM;
  } catch (const std::exception &e) {
    return record_error(ctx, ErrorKind::Internal, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char **out, const ordered_json &doc) {
  *out = dup_string(doc.dump());
}

void emit(char **out, const std::string &s) { *out = dup_string(s); }

Permutation perm_from(const int *word, size_t n) {
  if (!word && n > 0) {
    fail(ErrorKind::InvalidArgument, "null permutation word");
  }
  return Permutation::from_word(std::vector<int>(word, word + n));
}

Partition shape_from(const int *parts, size_t m) {
  if (!parts && m > 0) {
    fail(ErrorKind::InvalidArgument, "null shape");
  }
  return Partition::from_parts(std::vector<int>(parts, parts + m));
}

TwoLineArray array_from(const int *us, const int *vs, size_t n) {
  if ((!us || !vs) && n > 0) {
    fail(ErrorKind::InvalidArgument, "null two-line array");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n);
  for (size_t i = 0; i < n; ++i) pairs.emplace_back(us[i], vs[i]);
  return TwoLineArray::from_pairs(std::move(pairs));
}

// Shape comparison comes before entry validation so that mismatched pairs
// report ShapeMismatch no matter how the entries look.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
parse_tableau_pair(const char *p_json, const char *q_json) {
  if (!p_json || !q_json) {
    fail(ErrorKind::InvalidArgument, "null tableau input");
  }
  auto p_rows = parse_rows(p_json);
  auto q_rows = parse_rows(q_json);
  auto lengths = [](const std::vector<std::vector<int>> &rows) {
    std::vector<size_t> out;
    out.reserve(rows.size());
    for (const auto &row : rows) out.push_back(row.size());
    return out;
  };
  if (lengths(p_rows) != lengths(q_rows)) {
    fail(ErrorKind::ShapeMismatch,
         "insertion and recording tableaux must have equal shapes");
  }
  return {std::move(p_rows), std::move(q_rows)};
}

}  // namespace

extern "C" {

permtab_ctx *permtab_ctx_new(void) {
  return new (std::nothrow) permtab_ctx();
}

void permtab_ctx_free(permtab_ctx *ctx) { delete ctx; }

const char *permtab_version(void) { return PERMTAB_VERSION; }

const char *permtab_last_error(const permtab_ctx *ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

const char *permtab_last_error_kind(const permtab_ctx *ctx) {
  return ctx ? ctx->last_error_kind.c_str() : "";
}

permtab_status permtab_ctx_set_guard(permtab_ctx *ctx, const char *name,
                                     int value) {
  return guarded(ctx, [&] {
    if (!name || value < 1) {
      fail(ErrorKind::InvalidArgument, "guard needs a name and value >= 1");
    }
    const std::string which = name;
    bool matched = false;
    const bool all = which == "all";
    if (all || which == "brute") ctx->brute_guard = value, matched = true;
    if (all || which == "epsilon") ctx->epsilon_guard = value, matched = true;
    if (all || which == "canonical") {
      ctx->canonical_guard = value, matched = true;
    }
    if (all || which == "syt_enumerate") {
      ctx->syt_enumerate_guard = value, matched = true;
    }
    if (all || which == "schur") ctx->schur_guard = value, matched = true;
    if (all || which == "rk") ctx->rk_guard = value, matched = true;
    if (!matched) {
      fail(ErrorKind::InvalidArgument, "unknown guard name: " + which);
    }
  });
}

permtab_status permtab_ctx_set_threads(permtab_ctx *ctx, int threads) {
  return guarded(ctx, [&] {
    if (threads < 1 || threads > 512) {
      fail(ErrorKind::InvalidArgument, "thread count must be in 1..512");
    }
    ctx->threads = threads;
  });
}

void permtab_str_free(char *s) { std::free(s); }

permtab_status permtab_rsk_forward(permtab_ctx *ctx, const int *word,
                                   size_t n, char **json_out) {
  return guarded(ctx, [&] {
    const Permutation perm = perm_from(word, n);
    const TableauPair pair = rsk_forward(perm);
    emit(json_out, ordered_json{{"P", to_json(pair.p)},
                                {"Q", to_json(pair.q)},
                                {"shape", to_json(pair.p.shape())},
                                {"lds", lds(perm).length}});
  });
}

permtab_status permtab_rsk_inverse(permtab_ctx *ctx, const char *p_json,
                                   const char *q_json, char **json_out) {
  return guarded(ctx, [&] {
    auto [p_rows, q_rows] = parse_tableau_pair(p_json, q_json);
    const Permutation perm =
        rsk_inverse(StandardTableau::from_rows(std::move(p_rows)),
                    StandardTableau::from_rows(std::move(q_rows)));
    emit(json_out, ordered_json{{"perm", to_json(perm)}});
  });
}

permtab_status permtab_knuth_forward(permtab_ctx *ctx, const int *us,
                                     const int *vs, size_t n,
                                     char **json_out) {
  return guarded(ctx, [&] {
    const GeneralizedPair pair = knuth_forward(array_from(us, vs, n));
    emit(json_out, ordered_json{{"P", to_json(pair.p)},
                                {"Q", to_json(pair.q)},
                                {"shape", to_json(pair.p.shape())}});
  });
}

permtab_status permtab_knuth_inverse(permtab_ctx *ctx, const char *p_json,
                                     const char *q_json, char **json_out) {
  return guarded(ctx, [&] {
    auto [p_rows, q_rows] = parse_tableau_pair(p_json, q_json);
    const TwoLineArray array =
        knuth_inverse(GeneralizedTableau::from_rows(std::move(p_rows)),
                      GeneralizedTableau::from_rows(std::move(q_rows)));
    emit(json_out, ordered_json{{"array", to_json(array)}});
  });
}

permtab_status permtab_perm_to_array(permtab_ctx *ctx, const int *word,
                                     size_t n, char **json_out) {
  return guarded(ctx, [&] {
    const TwoLineArray array = perm_to_array(perm_from(word, n));
    emit(json_out, ordered_json{{"array", to_json(array)}});
  });
}

permtab_status permtab_array_to_matrix(permtab_ctx *ctx, const int *us,
                                       const int *vs, size_t n, int rows,
                                       int cols, char **json_out) {
  return guarded(ctx, [&] {
    if (rows < 0 || cols < 0) {
      fail(ErrorKind::InvalidArgument, "dimensions must be nonnegative");
    }
    const MultiplicityMatrix matrix =
        array_to_matrix(array_from(us, vs, n), rows, cols);
    emit(json_out, ordered_json{{"matrix", to_json(matrix)}});
  });
}

permtab_status permtab_matrix_to_array(permtab_ctx *ctx,
                                       const char *matrix_json,
                                       char **json_out) {
  return guarded(ctx, [&] {
    if (!matrix_json) fail(ErrorKind::InvalidArgument, "null matrix input");
    const TwoLineArray array = matrix_to_array(
        MultiplicityMatrix::from_entries(parse_matrix(matrix_json)));
    emit(json_out, ordered_json{{"array", to_json(array)}});
  });
}

permtab_status permtab_knuth_roundtrip_check(permtab_ctx *ctx, int trials,
                                             int max_len, int max_letter,
                                             unsigned seed, char **json_out) {
  return guarded(ctx, [&] {
    if (trials < 1 || max_len < 1 || max_letter < 1) {
      fail(ErrorKind::InvalidArgument,
           "trials, max_len and max_letter must be >= 1");
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(1, max_letter);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      std::vector<std::pair<int, int>> pairs(len_dist(rng));
      for (auto &[u, v] : pairs) {
        u = letter_dist(rng);
        v = letter_dist(rng);
      }
      std::sort(pairs.begin(), pairs.end());
      const TwoLineArray array = TwoLineArray::from_pairs(std::move(pairs));
      const GeneralizedPair pair = knuth_forward(array);
      if (knuth_inverse(pair.p, pair.q) != array) ++failures;
      if (matrix_to_array(array_to_matrix(array)) != array) ++failures;
    }
    emit(json_out, ordered_json{{"trials", trials},
                                {"failures", failures},
                                {"seed", seed}});
  });
}

permtab_status permtab_lds(permtab_ctx *ctx, const int *word, size_t n,
                           char **json_out) {
  return guarded(ctx, [&] {
    const LdsResult result = lds(perm_from(word, n));
    emit(json_out, ordered_json{{"length", result.length},
                                {"witness", result.witness}});
  });
}

permtab_status permtab_hook_lengths(permtab_ctx *ctx, const int *parts,
                                    size_t m, char **json_out) {
  return guarded(ctx, [&] {
    const Partition shape = shape_from(parts, m);
    emit(json_out, ordered_json{{"shape", to_json(shape)},
                                {"hook_lengths", hook_lengths(shape)},
                                {"count", decimal(syt_count_hook(shape))}});
  });
}

permtab_status permtab_syt_count(permtab_ctx *ctx, const int *parts,
                                 size_t m, const char *method,
                                 char **dec_out) {
  return guarded(ctx, [&] {
    const Partition shape = shape_from(parts, m);
    const std::string which = method ? method : "hook";
    Count count;
    if (which == "hook") {
      count = syt_count_hook(shape);
    } else if (which == "enumerate") {
      count = Count(static_cast<long>(
          syt_enumerate(shape, ctx->syt_enumerate_guard).size()));
    } else if (which == "schur") {
      count = syt_count_schur(shape, ctx->schur_guard);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown method: " + which);
    }
    emit(dec_out, decimal(count));
  });
}

permtab_status permtab_syt_enumerate(permtab_ctx *ctx, const int *parts,
                                     size_t m, char **json_out) {
  return guarded(ctx, [&] {
    const Partition shape = shape_from(parts, m);
    const auto all = syt_enumerate(shape, ctx->syt_enumerate_guard);
    auto tableaux = ordered_json::array();
    for (const auto &t : all) tableaux.push_back(to_json(t));
    emit(json_out,
         ordered_json{{"shape", to_json(shape)},
                      {"count", decimal(Count(static_cast<long>(all.size())))},
                      {"tableaux", tableaux}});
  });
}

permtab_status permtab_count_catalan(permtab_ctx *ctx, int n,
                                     char **dec_out) {
  return guarded(ctx, [&] { emit(dec_out, decimal(catalan(n))); });
}

permtab_status permtab_count_xi(permtab_ctx *ctx, int n, int k,
                                const char *method, char **dec_out) {
  return guarded(ctx, [&] {
    const std::string which = method ? method : "shapes";
    Count value;
    if (which == "brute") {
      value = xi_brute(n, k, ctx->brute_guard, ctx->threads);
    } else if (which == "shapes") {
      value = xi_shapes(n, k);
    } else if (which == "series") {
      value = xi_from_series(k, n);
    } else if (which == "closed") {
      if (k != 3) {
        fail(ErrorKind::InvalidArgument,
             "the closed form is only available for k = 3");
      }
      value = xi3_closed(n);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown method: " + which);
    }
    emit(dec_out, decimal(value));
  });
}

permtab_status permtab_count_beth(permtab_ctx *ctx, int n, int k,
                                  char **dec_out) {
  return guarded(ctx, [&] { emit(dec_out, decimal(beth_exact(n, k))); });
}

permtab_status permtab_count_epsilon(permtab_ctx *ctx, int n,
                                     char **json_out) {
  return guarded(ctx, [&] {
    emit(json_out,
         census_to_json(epsilon_exact(n, ctx->epsilon_guard, ctx->threads)));
  });
}

permtab_status permtab_count_lds_distribution(permtab_ctx *ctx, int n,
                                              const char *method,
                                              char **json_out) {
  return guarded(ctx, [&] {
    const std::string which = method ? method : "shapes";
    std::map<int, Count> distribution;
    if (which == "brute") {
      distribution = lds_distribution_brute(n, ctx->brute_guard, ctx->threads);
    } else if (which == "shapes") {
      distribution = lds_distribution_shapes(n);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown method: " + which);
    }
    auto entries = ordered_json::object();
    for (const auto &[k, count] : distribution) {
      entries[std::to_string(k)] = decimal(count);
    }
    emit(json_out, ordered_json{{"distribution", entries}});
  });
}

permtab_status permtab_poset_from_perm(permtab_ctx *ctx, const int *word,
                                       size_t n, char **json_out) {
  return guarded(ctx, [&] {
    const Poset poset = poset_from_permutation(perm_from(word, n));
    auto relations = ordered_json::array();
    for (const auto &[a, b] : poset.relations()) {
      relations.push_back(ordered_json::array({a, b}));
    }
    const AntichainResult antichain = max_antichain(poset);
    emit(json_out,
         ordered_json{{"n", poset.size()},
                      {"relations", relations},
                      {"max_antichain",
                       ordered_json{{"size", antichain.size},
                                    {"witness", antichain.witness}}}});
  });
}

permtab_status permtab_posets_isomorphic(permtab_ctx *ctx, const int *word_a,
                                         size_t na, const int *word_b,
                                         size_t nb, int *iso_out) {
  return guarded(ctx, [&] {
    if (!iso_out) fail(ErrorKind::InvalidArgument, "null output");
    const Poset a = poset_from_permutation(perm_from(word_a, na));
    const Poset b = poset_from_permutation(perm_from(word_b, nb));
    *iso_out = is_isomorphic(a, b, ctx->canonical_guard) ? 1 : 0;
  });
}

permtab_status permtab_bound_xi(permtab_ctx *ctx, int n, int k,
                                char **json_out) {
  return guarded(ctx, [&] { emit(json_out, to_json(xi_bound(n, k))); });
}

permtab_status permtab_bound_epsilon(permtab_ctx *ctx, int n, int k,
                                     char **json_out) {
  return guarded(ctx, [&] { emit(json_out, to_json(epsilon_bound(n, k))); });
}

permtab_status permtab_bound_beth(permtab_ctx *ctx, int n, int k,
                                  char **json_out) {
  return guarded(ctx, [&] { emit(json_out, to_json(beth_bound(n, k))); });
}

permtab_status permtab_bound_multilinear(permtab_ctx *ctx, int l, int n,
                                         int k, char **json_out) {
  return guarded(ctx, [&] {
    emit(json_out,
         ordered_json{{"bound", to_json(multilinear_bound(l, n, k))},
                      {"exact", decimal(multilinear_exact(l, n, k))}});
  });
}

permtab_status permtab_bounds_verify(permtab_ctx *ctx, int max_n, int max_l,
                                     char **json_out) {
  return guarded(ctx, [&] {
    VerifyOptions options;
    options.max_n = max_n;
    options.max_l = max_l;
    options.brute_guard = ctx->brute_guard;
    options.epsilon_guard = ctx->epsilon_guard;
    options.threads = ctx->threads;
    emit(json_out, to_json(verify(options)));
  });
}

permtab_status permtab_series_b(permtab_ctx *ctx, int index, int degree,
                                char **json_out) {
  return guarded(ctx, [&] {
    if (degree < 0 || degree > 4096) {
      fail(ErrorKind::OutOfRange, "degree must be in 0..4096");
    }
    emit(json_out, to_json(bessel_b(index, degree)));
  });
}

permtab_status permtab_series_u(permtab_ctx *ctx, int k, int degree,
                                char **json_out) {
  return guarded(ctx, [&] {
    if (degree < 0 || degree > 256) {
      fail(ErrorKind::OutOfRange, "degree must be in 0..256");
    }
    if (k > 16) {
      fail(ErrorKind::OutOfRange, "determinant size must be in 1..16");
    }
    emit(json_out, to_json(gessel_U(k, degree)));
  });
}

}  // extern "C"
