#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/entry_name.hpp"
#include "bicross/matched_pair.hpp"

namespace bicross {

// One classified matched pair of dimension 1+1 or 2+1.
struct CatalogEntry {
  std::string name;  // base name, e.g. "2+1/4.1"
  Params params;
  std::string summary;
  NPlus1Data data;
  std::string group_entry;      // empty when no explicit group pair is shipped
  std::string bialgebra_entry;  // empty when no bialgebra entry is shipped

  std::string full_name() const { return format_entry_name(name, params); }
};

struct CatalogOptions {
  // Case 2.1 is normalized to -1 <= r <= 1; values outside are redundant.
  bool allow_redundant_r = false;
};

// Base names in catalog order.
const std::vector<std::string>& catalog_names();
std::set<std::string> catalog_parameter_keys(const std::string& base);

// Builds one entry. Missing parameters take the defaults d=-1, r=1/2,
// a=-1 and b=1 when d=1 (b=0 otherwise). Throws std::invalid_argument for
// unknown names, unknown keys and out-of-range values.
CatalogEntry make_catalog_entry(const std::string& base, const Params& params, CatalogOptions opts = {});
CatalogEntry catalog_entry(std::string_view full_name, CatalogOptions opts = {});

// All 15 entries; each override applies to the entries accepting its key.
std::vector<CatalogEntry> catalog(const Params& overrides = {}, CatalogOptions opts = {});

}  // namespace bicross
