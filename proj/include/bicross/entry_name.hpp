#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "bicross/scalar.hpp"

namespace bicross {

using Params = std::map<std::string, Scalar>;

// "<base>?k=v&k=v", e.g. "2+1/4.1?d=-1&b=0". Values are kept as text.
struct EntryName {
  std::string base;
  std::map<std::string, std::string> params;
};

EntryName parse_entry_name(std::string_view text);
// Canonical form with keys in sorted order; no '?' when params are empty.
std::string format_entry_name(const std::string& base, const Params& params);

// Parses every value as a Scalar; keys outside `allowed` are rejected with
// std::invalid_argument.
Params parse_params(const EntryName& name, const std::set<std::string>& allowed);

}  // namespace bicross
