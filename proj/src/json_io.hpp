#pragma once

#include <json.hpp>

#include "bounds.hpp"
#include "core.hpp"
#include "genfunc.hpp"

namespace permtab {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Permutation &perm);
ordered_json to_json(const Partition &shape);
ordered_json to_json(const GeneralizedTableau &tableau);
ordered_json to_json(const StandardTableau &tableau);
ordered_json to_json(const TwoLineArray &array);
ordered_json to_json(const MultiplicityMatrix &matrix);
ordered_json to_json(const Exact &value);        // {"num","den"}
ordered_json to_json(const TruncatedSeries &s);  // coefficient list
ordered_json to_json(const BoundsReport &report);
ordered_json census_to_json(const std::map<int, Count> &census);

// Structure-only parsers; value-level validation happens in the domain
// constructors afterwards.
std::vector<std::vector<int>> parse_rows(const std::string &text);
std::vector<std::vector<long>> parse_matrix(const std::string &text);

}  // namespace permtab
