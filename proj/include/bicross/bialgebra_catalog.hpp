#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/bialgebra.hpp"

namespace bicross {

// Listed Lie bialgebras. Decomposable entries come in pairs "bialg/<case>"
// (primal, basis X, Y, ~A) and "bialg/<case>*" (listed dual, basis ~X, ~Y, A).
// Transcendental parameters (log q, r/sin r, ...) are opaque named
// rationals.
struct BialgebraEntry {
  std::string name;
  Params params;
  std::string summary;
  LieBialgebra bialgebra;
  // Primal decomposable entries: the (chi, beta) read off the group pair.
  std::optional<NPlus1Data> data;
  // Primal <-> listed dual cross-reference, with parameters.
  std::string partner;

  std::string full_name() const { return format_entry_name(name, params); }
};

const std::vector<std::string>& bialgebra_names();
std::set<std::string> bialgebra_parameter_keys(const std::string& base);

// Missing parameters take the first sample of bialgebra_samples(base).
BialgebraEntry make_bialgebra_entry(const std::string& base, const Params& params = {});
BialgebraEntry bialgebra_entry(std::string_view full_name);

// At least three exact samples per entry, plus one converted exactly from
// double-precision values of the transcendental expressions where the
// entry has them.
std::vector<Params> bialgebra_samples(const std::string& base);

// Every entry at its default sample.
std::vector<BialgebraEntry> catalog_bialgebras();

// For self-dual entries: dual(entry) is isomorphic to `partner` via `map`
// (columns indexed by the dual basis).
struct SelfDuality {
  std::string partner;
  Matrix map;
};
std::optional<SelfDuality> self_duality(const BialgebraEntry& entry);

}  // namespace bicross
