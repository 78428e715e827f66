#include "json_io.hpp"

namespace permtab {

ordered_json to_json(const Permutation &perm) {
  return ordered_json(perm.word());
}

ordered_json to_json(const Partition &shape) {
  return ordered_json(shape.parts());
}

ordered_json to_json(const GeneralizedTableau &tableau) {
  return ordered_json(tableau.rows());
}

ordered_json to_json(const StandardTableau &tableau) {
  return ordered_json(tableau.rows());
}

ordered_json to_json(const TwoLineArray &array) {
  auto out = ordered_json::array();
  for (const auto &[u, v] : array.pairs()) {
    out.push_back(ordered_json::array({u, v}));
  }
  return out;
}

ordered_json to_json(const MultiplicityMatrix &matrix) {
  return ordered_json(matrix.entries());
}

ordered_json to_json(const Exact &value) {
  return ordered_json{{"num", decimal_num(value)},
                      {"den", decimal_den(value)}};
}

ordered_json to_json(const TruncatedSeries &s) {
  auto coeffs = ordered_json::array();
  for (int i = 0; i <= s.degree(); ++i) coeffs.push_back(to_json(s.coeff(i)));
  return ordered_json{{"degree", s.degree()}, {"coefficients", coeffs}};
}

ordered_json to_json(const BoundsReport &report) {
  auto rows = ordered_json::array();
  for (const auto &row : report.rows) {
    ordered_json item{{"statistic", row.statistic},
                      {"n", row.n},
                      {"k", row.k},
                      {"exact", decimal(row.exact)},
                      {"bound", to_json(row.bound)},
                      {"ratio", to_json(row.ratio)},
                      {"pass", row.pass},
                      {"method", row.method}};
    if (row.has_at_most) item["exact_at_most"] = decimal(row.exact_at_most);
    rows.push_back(std::move(item));
  }
  return ordered_json{{"rows", rows}, {"all_pass", report.all_pass}};
}

ordered_json census_to_json(const std::map<int, Count> &census) {
  auto classes = ordered_json::object();
  Count total = 0;
  for (const auto &[k, count] : census) {
    classes[std::to_string(k)] = decimal(count);
    total += count;
  }
  return ordered_json{{"classes", classes}, {"total", decimal(total)}};
}

namespace {

nlohmann::json parse_document(const std::string &text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    fail(ErrorKind::InvalidArgument, "input is not valid JSON");
  }
  return doc;
}

}  // namespace

std::vector<std::vector<int>> parse_rows(const std::string &text) {
  const auto doc = parse_document(text);
  if (!doc.is_array()) {
    fail(ErrorKind::InvalidArgument, "expected a JSON array of rows");
  }
  std::vector<std::vector<int>> rows;
  for (const auto &row : doc) {
    if (!row.is_array()) {
      fail(ErrorKind::InvalidArgument, "expected each row to be an array");
    }
    std::vector<int> entries;
    for (const auto &value : row) {
      if (!value.is_number_integer()) {
        fail(ErrorKind::InvalidArgument, "tableau entries must be integers");
      }
      entries.push_back(value.get<int>());
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

std::vector<std::vector<long>> parse_matrix(const std::string &text) {
  const auto doc = parse_document(text);
  if (!doc.is_array()) {
    fail(ErrorKind::InvalidArgument, "expected a JSON array of rows");
  }
  std::vector<std::vector<long>> rows;
  for (const auto &row : doc) {
    if (!row.is_array()) {
      fail(ErrorKind::InvalidArgument, "expected each row to be an array");
    }
    std::vector<long> entries;
    for (const auto &value : row) {
      if (!value.is_number_integer()) {
        fail(ErrorKind::InvalidArgument, "matrix entries must be integers");
      }
      entries.push_back(value.get<long>());
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

}  // namespace permtab
