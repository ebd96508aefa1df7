#pragma once

#include "wreathchar/decomposition.hpp"
#include "wreathchar/search.hpp"

#include <json.hpp>

#include <string>

namespace wreathchar {

// JSON layouts are deterministic: nlohmann objects order keys
// lexicographically and every field is integral or boolean except the
// segregated "timing" object, which is the only part excluded from
// byte-identity guarantees.

nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const SearchReport& r);

SearchReport search_report_from_json(const nlohmann::json& j);

std::string to_text(const Decomposition& d);
std::string to_text(const TheoremReport& r);
std::string to_text(const SearchReport& r);

// "count,frequency" rows in ascending count order.
std::string histogram_csv(const SearchReport& r);

} // namespace wreathchar
