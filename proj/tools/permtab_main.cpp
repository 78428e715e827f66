// Command-line front end; everything goes through the C API in
// include/permtab/permtab.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <functional>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permtab/permtab.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBoundFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Options {
  std::string format = "json";
  int guard = 0;    // 0 = library defaults
  int threads = 0;  // 0 = library default (single worker)
  unsigned seed = 20250801;
};

class Context {
 public:
  Context() : ctx_(permtab_ctx_new()) {}
  ~Context() { permtab_ctx_free(ctx_); }
  Context(const Context &) = delete;
  Context &operator=(const Context &) = delete;
  permtab_ctx *get() const { return ctx_; }

 private:
  permtab_ctx *ctx_;
};

int report_error(const Context &ctx, permtab_status status) {
  json err{{"error",
            json{{"kind", permtab_last_error_kind(ctx.get())},
                 {"message", permtab_last_error(ctx.get())}}}};
  std::cerr << err.dump() << "\n";
  return status == PERMTAB_ERR_GUARD ? kExitGuard : kExitUsage;
}

int report_usage(const std::string &message) {
  json err{{"error",
            json{{"kind", "InvalidArgument"}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return kExitUsage;
}

// Owns strings handed back by the library.
struct ApiString {
  ~ApiString() { permtab_str_free(value); }
  char *value = nullptr;
  std::string str() const { return value ? value : ""; }
};

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    size_t used = 0;
    const int value = std::stoi(item, &used);
    while (used < item.size() &&
           std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (used != item.size()) {
      throw std::invalid_argument("expected a comma-separated integer list");
    }
    out.push_back(value);
  }
  return out;
}

// "1,1 1,3 2,2" -> u-line and v-line.
std::pair<std::vector<int>, std::vector<int>> parse_pair_list(
    const std::string &text) {
  std::vector<int> us, vs;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    const auto pair = parse_int_list(token);
    if (pair.size() != 2) {
      throw std::invalid_argument("expected space-separated u,v pairs");
    }
    us.push_back(pair[0]);
    vs.push_back(pair[1]);
  }
  return {std::move(us), std::move(vs)};
}

void print_envelope(const std::string &command, const json &result) {
  json envelope{{"tool", "permtab"},
                {"version", permtab_version()},
                {"command", command},
                {"result", result}};
  std::cout << envelope.dump() << "\n";
}

std::string ratio_string(const json &rational) {
  return rational.at("num").get<std::string>() + "/" +
         rational.at("den").get<std::string>();
}

void print_verify_csv(const json &report) {
  std::cout << "statistic,n,k,exact,bound_num,bound_den,ratio,pass\n";
  for (const auto &row : report.at("rows")) {
    std::cout << row.at("statistic").get<std::string>() << ","
              << row.at("n").get<int>() << "," << row.at("k").get<int>()
              << "," << row.at("exact").get<std::string>() << ","
              << row.at("bound").at("num").get<std::string>() << ","
              << row.at("bound").at("den").get<std::string>() << ","
              << ratio_string(row.at("ratio")) << ","
              << (row.at("pass").get<bool>() ? "true" : "false") << "\n";
  }
}

void print_verify_text(const json &report) {
  std::printf("%-18s %3s %3s %16s %26s %5s\n", "statistic", "n", "k",
              "exact", "bound", "pass");
  for (const auto &row : report.at("rows")) {
    std::printf("%-18s %3d %3d %16s %26s %5s\n",
                row.at("statistic").get<std::string>().c_str(),
                row.at("n").get<int>(), row.at("k").get<int>(),
                row.at("exact").get<std::string>().c_str(),
                ratio_string(row.at("bound")).c_str(),
                row.at("pass").get<bool>() ? "pass" : "FAIL");
  }
  std::printf("summary: %s\n",
              report.at("all_pass").get<bool>() ? "all bounds hold"
                                                : "BOUND VIOLATION");
}

// Plain rendering: one top-level field per line.
void print_text(const json &result) {
  if (!result.is_object()) {
    std::cout << result.dump() << "\n";
    return;
  }
  for (const auto &[key, value] : result.items()) {
    if (value.is_string()) {
      std::cout << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << key << ": " << value.dump() << "\n";
    }
  }
}

int finish(const Options &options, const std::string &command,
           const json &result) {
  if (options.format == "text") {
    print_text(result);
  } else {
    print_envelope(command, result);
  }
  return kExitOk;
}

bool csv_rejected(const Options &options, int &rc) {
  if (options.format == "csv") {
    rc = report_usage("csv format is only available for reports");
    return true;
  }
  return false;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact combinatorics of permutations, Young tableaux and "
               "dimension-2 posets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", permtab_version());

  Options options;
  app.add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--guard", options.guard,
                 "override every enumeration guard (use with care)");
  app.add_option("--threads", options.threads, "worker count for sweeps");
  app.add_option("--seed", options.seed, "seed for randomized subcommands")
      ->capture_default_str();

  // rsk: forward from --perm, inverse from --p/--q.
  auto *rsk = app.add_subcommand("rsk", "Schensted correspondence");
  std::string rsk_perm, rsk_p, rsk_q;
  rsk->add_option("--perm", rsk_perm, "one-line word, e.g. 2,3,1");
  rsk->add_option("--p", rsk_p, "insertion tableau as JSON rows");
  rsk->add_option("--q", rsk_q, "recording tableau as JSON rows");

  auto *knuth = app.add_subcommand(
      "knuth", "two-line array correspondence and matrix conversions");
  knuth->require_subcommand(1);
  std::string knuth_array, knuth_p, knuth_q, knuth_matrix;
  int knuth_rows = 0, knuth_cols = 0;
  int knuth_trials = 10000, knuth_max_len = 12, knuth_alphabet = 5;
  auto *knuth_fwd = knuth->add_subcommand("forward", "array -> (P, Q)");
  knuth_fwd->add_option("--array", knuth_array, "pairs, e.g. '1,1 1,3 2,2'")
      ->required();
  auto *knuth_inv = knuth->add_subcommand("inverse", "(P, Q) -> array");
  knuth_inv->add_option("--p", knuth_p)->required();
  knuth_inv->add_option("--q", knuth_q)->required();
  auto *knuth_to_matrix =
      knuth->add_subcommand("to-matrix", "array -> multiplicity matrix");
  knuth_to_matrix->add_option("--array", knuth_array)->required();
  knuth_to_matrix->add_option("--rows", knuth_rows);
  knuth_to_matrix->add_option("--cols", knuth_cols);
  auto *knuth_from_matrix =
      knuth->add_subcommand("from-matrix", "multiplicity matrix -> array");
  knuth_from_matrix->add_option("--matrix", knuth_matrix, "JSON grid")
      ->required();
  auto *knuth_roundtrip =
      knuth->add_subcommand("roundtrip", "randomized round-trip self-check");
  knuth_roundtrip->add_option("--trials", knuth_trials)
      ->capture_default_str();
  knuth_roundtrip->add_option("--max-len", knuth_max_len)
      ->capture_default_str();
  knuth_roundtrip->add_option("--alphabet", knuth_alphabet)
      ->capture_default_str();

  auto *count = app.add_subcommand("count", "exact counting");
  count->require_subcommand(1);
  int count_n = 0, count_k = 0;
  std::string count_method = "shapes";
  auto *count_xi = count->add_subcommand(
      "xi", "permutations with decreasing runs of length at most k");
  count_xi->add_option("--n", count_n)->required();
  count_xi->add_option("--k", count_k)->required();
  count_xi->add_option("--method", count_method,
                       "brute|shapes|series|closed")
      ->capture_default_str();
  auto *count_beth =
      count->add_subcommand("beth", "standard tableaux with at most k rows");
  count_beth->add_option("--n", count_n)->required();
  count_beth->add_option("--k", count_k)->required();
  auto *count_epsilon = count->add_subcommand(
      "epsilon", "dimension-2 posets by maximum antichain size");
  count_epsilon->add_option("--n", count_n)->required();
  auto *count_lds = count->add_subcommand(
      "lds-dist", "permutations by longest decreasing run");
  count_lds->add_option("--n", count_n)->required();
  count_lds->add_option("--method", count_method, "brute|shapes")
      ->capture_default_str();
  auto *count_catalan = count->add_subcommand("catalan", "Catalan numbers");
  count_catalan->add_option("--n", count_n)->required();

  auto *bounds = app.add_subcommand("bounds", "bound verification");
  bounds->require_subcommand(1);
  int bounds_max_n = 6, bounds_max_l = 0;
  auto *bounds_verify = bounds->add_subcommand(
      "verify", "compare exact statistics against their bounds");
  bounds_verify->add_option("--max-n", bounds_max_n)->capture_default_str();
  bounds_verify->add_option("--max-l", bounds_max_l,
                            "multilinear sweep limit (default: max-n)");

  auto *series = app.add_subcommand("series", "exact truncated series");
  series->require_subcommand(1);
  int series_index = 0, series_k = 1, series_degree = 8;
  auto *series_b = series->add_subcommand("b", "Bessel-type base series");
  series_b->add_option("--index", series_index)->capture_default_str();
  series_b->add_option("--degree", series_degree)->capture_default_str();
  auto *series_u =
      series->add_subcommand("u", "determinant series over the b family");
  series_u->add_option("--k", series_k)->required();
  series_u->add_option("--degree", series_degree)->capture_default_str();

  auto *tableaux = app.add_subcommand("tableaux", "standard Young tableaux");
  tableaux->require_subcommand(1);
  std::string tableaux_shape, tableaux_method = "hook";
  auto *tableaux_enumerate =
      tableaux->add_subcommand("enumerate", "list all fillings");
  tableaux_enumerate->add_option("--shape", tableaux_shape, "e.g. 2,1")
      ->required();
  auto *tableaux_hook = tableaux->add_subcommand(
      "hook-count", "hook lengths and the tableau count");
  tableaux_hook->add_option("--shape", tableaux_shape)->required();
  tableaux_hook
      ->add_option("--method", tableaux_method, "hook|enumerate|schur")
      ->capture_default_str();

  auto *posets = app.add_subcommand("posets", "dimension-2 posets");
  posets->require_subcommand(1);
  std::string posets_perm, posets_perm2;
  int posets_n = 0;
  auto *posets_from = posets->add_subcommand(
      "from-perm", "intersection order of a permutation");
  posets_from->add_option("--perm", posets_perm)->required();
  auto *posets_census = posets->add_subcommand(
      "census", "isomorphism classes by maximum antichain");
  posets_census->add_option("--n", posets_n)->required();
  auto *posets_iso = posets->add_subcommand(
      "isomorphic", "compare two intersection orders");
  posets_iso->add_option("--perm", posets_perm)->required();
  posets_iso->add_option("--perm2", posets_perm2)->required();

  // Global flags may follow the subcommand.
  std::function<void(CLI::App *)> enable_fallthrough =
      [&](CLI::App *command) {
        command->fallthrough();
        for (auto *sub : command->get_subcommands(
                 [](const CLI::App *) { return true; })) {
          enable_fallthrough(sub);
        }
      };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  Context ctx;
  if (!ctx.get()) {
    std::cerr << R"({"error":{"kind":"OutOfMemory","message":"no context"}})"
              << "\n";
    return kExitUsage;
  }
  if (options.guard > 0) {
    std::cerr << "warning: every enumeration guard overridden to "
              << options.guard << "; large sweeps may take very long\n";
    permtab_ctx_set_guard(ctx.get(), "all", options.guard);
  }
  if (options.threads > 0 &&
      permtab_ctx_set_threads(ctx.get(), options.threads) != PERMTAB_OK) {
    return report_error(ctx, PERMTAB_ERR_INVALID);
  }

  int rc = kExitOk;
  try {
    if (rsk->parsed()) {
      if (csv_rejected(options, rc)) return rc;
      ApiString out;
      if (!rsk_perm.empty()) {
        const auto word = parse_int_list(rsk_perm);
        const auto status = permtab_rsk_forward(ctx.get(), word.data(),
                                                word.size(), &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        return finish(options, "rsk", json::parse(out.str()));
      }
      if (rsk_p.empty() || rsk_q.empty()) {
        return report_usage("rsk needs --perm, or --p and --q");
      }
      const auto status = permtab_rsk_inverse(ctx.get(), rsk_p.c_str(),
                                              rsk_q.c_str(), &out.value);
      if (status != PERMTAB_OK) return report_error(ctx, status);
      return finish(options, "rsk", json::parse(out.str()));
    }

    if (knuth->parsed()) {
      if (csv_rejected(options, rc)) return rc;
      ApiString out;
      permtab_status status = PERMTAB_OK;
      std::string command;
      if (knuth_fwd->parsed()) {
        const auto [us, vs] = parse_pair_list(knuth_array);
        status = permtab_knuth_forward(ctx.get(), us.data(), vs.data(),
                                       us.size(), &out.value);
        command = "knuth forward";
      } else if (knuth_inv->parsed()) {
        status = permtab_knuth_inverse(ctx.get(), knuth_p.c_str(),
                                       knuth_q.c_str(), &out.value);
        command = "knuth inverse";
      } else if (knuth_to_matrix->parsed()) {
        const auto [us, vs] = parse_pair_list(knuth_array);
        status = permtab_array_to_matrix(ctx.get(), us.data(), vs.data(),
                                         us.size(), knuth_rows, knuth_cols,
                                         &out.value);
        command = "knuth to-matrix";
      } else if (knuth_from_matrix->parsed()) {
        status = permtab_matrix_to_array(ctx.get(), knuth_matrix.c_str(),
                                         &out.value);
        command = "knuth from-matrix";
      } else {
        status = permtab_knuth_roundtrip_check(
            ctx.get(), knuth_trials, knuth_max_len, knuth_alphabet,
            options.seed, &out.value);
        command = "knuth roundtrip";
      }
      if (status != PERMTAB_OK) return report_error(ctx, status);
      return finish(options, command, json::parse(out.str()));
    }

    if (count->parsed()) {
      if (csv_rejected(options, rc)) return rc;
      ApiString out;
      if (count_xi->parsed()) {
        const auto status = permtab_count_xi(
            ctx.get(), count_n, count_k, count_method.c_str(), &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        return finish(options, "count xi",
                      json{{"value", out.str()}, {"method", count_method}});
      }
      if (count_beth->parsed()) {
        const auto status =
            permtab_count_beth(ctx.get(), count_n, count_k, &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        return finish(options, "count beth", json{{"value", out.str()}});
      }
      if (count_epsilon->parsed()) {
        const auto status =
            permtab_count_epsilon(ctx.get(), count_n, &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        return finish(options, "count epsilon", json::parse(out.str()));
      }
      if (count_lds->parsed()) {
        const auto status = permtab_count_lds_distribution(
            ctx.get(), count_n, count_method.c_str(), &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        json result = json::parse(out.str());
        result["method"] = count_method;
        return finish(options, "count lds-dist", result);
      }
      const auto status =
          permtab_count_catalan(ctx.get(), count_n, &out.value);
      if (status != PERMTAB_OK) return report_error(ctx, status);
      return finish(options, "count catalan", json{{"value", out.str()}});
    }

    if (bounds->parsed()) {
      ApiString out;
      const auto status = permtab_bounds_verify(ctx.get(), bounds_max_n,
                                                bounds_max_l, &out.value);
      if (status != PERMTAB_OK) return report_error(ctx, status);
      const json report = json::parse(out.str());
      if (options.format == "csv") {
        print_verify_csv(report);
      } else if (options.format == "text") {
        print_verify_text(report);
      } else {
        print_envelope("bounds verify", report);
      }
      return report.at("all_pass").get<bool>() ? kExitOk
                                               : kExitBoundFailure;
    }

    if (series->parsed()) {
      if (csv_rejected(options, rc)) return rc;
      ApiString out;
      permtab_status status;
      std::string command;
      if (series_b->parsed()) {
        status = permtab_series_b(ctx.get(), series_index, series_degree,
                                  &out.value);
        command = "series b";
      } else {
        status = permtab_series_u(ctx.get(), series_k, series_degree,
                                  &out.value);
        command = "series u";
      }
      if (status != PERMTAB_OK) return report_error(ctx, status);
      return finish(options, command, json::parse(out.str()));
    }

    if (tableaux->parsed()) {
      if (csv_rejected(options, rc)) return rc;
      const auto shape = parse_int_list(tableaux_shape);
      ApiString out;
      if (tableaux_enumerate->parsed()) {
        const auto status = permtab_syt_enumerate(ctx.get(), shape.data(),
                                                  shape.size(), &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        return finish(options, "tableaux enumerate", json::parse(out.str()));
      }
      ApiString hooks;
      auto status = permtab_hook_lengths(ctx.get(), shape.data(),
                                         shape.size(), &hooks.value);
      if (status != PERMTAB_OK) return report_error(ctx, status);
      status = permtab_syt_count(ctx.get(), shape.data(), shape.size(),
                                 tableaux_method.c_str(), &out.value);
      if (status != PERMTAB_OK) return report_error(ctx, status);
      json result = json::parse(hooks.str());
      result["count"] = out.str();
      result["method"] = tableaux_method;
      return finish(options, "tableaux hook-count", result);
    }

    if (posets->parsed()) {
      if (csv_rejected(options, rc)) return rc;
      ApiString out;
      if (posets_from->parsed()) {
        const auto word = parse_int_list(posets_perm);
        const auto status = permtab_poset_from_perm(
            ctx.get(), word.data(), word.size(), &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        return finish(options, "posets from-perm", json::parse(out.str()));
      }
      if (posets_census->parsed()) {
        const auto status =
            permtab_count_epsilon(ctx.get(), posets_n, &out.value);
        if (status != PERMTAB_OK) return report_error(ctx, status);
        return finish(options, "posets census", json::parse(out.str()));
      }
      const auto a = parse_int_list(posets_perm);
      const auto b = parse_int_list(posets_perm2);
      int iso = 0;
      const auto status = permtab_posets_isomorphic(
          ctx.get(), a.data(), a.size(), b.data(), b.size(), &iso);
      if (status != PERMTAB_OK) return report_error(ctx, status);
      return finish(options, "posets isomorphic",
                    json{{"isomorphic", iso != 0}});
    }
  } catch (const std::exception &e) {
    return report_usage(std::string("bad input: ") + e.what());
  }
  return kExitUsage;
}
