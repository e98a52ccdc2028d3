#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicross/group_cocycle.hpp"
#include "bicross/serialize.hpp"

namespace bicross {

inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  std::vector<std::string> entries;  // names of any kind, or "all"
  std::size_t samples = 1000;
  unsigned long long seed = 1;
  std::optional<double> tol;  // group identity tolerance, default 1e-9
  Params overrides;           // d, b, r, a
  std::optional<double> lambda;
};

// One check; `passed` means the observed outcome equals the expected one
// (a Kac check on an entry known to fail the criterion passes when it fails).
struct CheckResult {
  std::string name;
  std::string label;  // case label, e.g. "2+1 case 4.1"
  bool passed = false;
  std::string detail;  // one-line summary for text output
  Json payload = Json::object();
};

struct EntryResult {
  std::string entry;
  std::string kind;  // algebra, group or bialgebra
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct Report {
  std::optional<RunConfig> config;  // absent in merged documents
  std::map<std::string, EntryResult> entries;

  bool passed() const;
  std::size_t failed_checks() const;
};

// Per-entry seed: FNV-1a of the entry name mixed with the run seed, so
// results do not depend on which other entries are selected.
unsigned long long entry_seed(const std::string& entry, unsigned long long seed);

// Expands "all" and applies overrides. Throws std::invalid_argument for an
// unknown entry or an override the named entry does not accept.
std::vector<std::string> resolve_entries(const RunConfig& cfg);

std::string entry_kind(const std::string& name);
// "2+1 case 4.1", "group pair 4.3=0", "bialgebra 4.2*".
std::string case_label(const std::string& name);

// Lambda used for cocycle checks when none is given: 4/pi on the case 4.3
// family, 1 elsewhere.
double default_cocycle_lambda(const std::string& group_entry);
// Whether the cocycle identities are expected to hold at lambda.
bool cocycle_expected(const std::string& group_entry, double lambda);
// Extension group dimension of the classification table.
std::size_t expected_extension_dim(const CatalogEntry& e);

EntryResult verify_entry(const std::string& name, const RunConfig& cfg);
Report verify(const RunConfig& cfg);

Json report_json(const Report& r);
// Throws std::invalid_argument when the document does not follow the schema.
void validate_report(const Json& j);
Report report_from_json(const Json& j);
// Later documents win on duplicate entries; their names go to `duplicates`.
Report merge_reports(const std::vector<Report>& parts, std::vector<std::string>* duplicates = nullptr);

std::string report_text(const Report& r);

}  // namespace bicross
