#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/chart_group.hpp"
#include "bicross/entry_name.hpp"
#include "bicross/matched_pair.hpp"

namespace bicross {

// Exact map from algebra data to the data read off the group pair:
// verify_isomorphism(source, derived, t, s) should hold.
struct AlgebraMatch {
  std::string label;         // "catalog" or "quoted"
  std::string catalog_name;  // algebra catalog entry the source comes from, if any
  NPlus1Data source;
  Matrix t;
  Scalar s;
};

// Partial mutual actions alpha_g(s) in G2 and beta_s(g) in G1 with
// j(alpha_g(s)) i(beta_s(g)) = i(g) j(s).
struct GroupMatchedPair {
  std::string name;  // base name, e.g. "group/4.1"
  Params params;
  std::string summary;
  ChartGroup g, g1, g2;
  std::function<Point(const Point&)> embed1;  // i
  std::function<Point(const Point&)> embed2;  // j
  std::function<Point(const Point&, const Point&)> alpha;  // (g, s)
  std::function<Point(const Point&, const Point&)> beta;   // (s, g)
  // Positive inside the domain of the actions; smallest denominator magnitude.
  std::function<double(const Point&, const Point&)> margin;
  std::vector<AlgebraMatch> matches;
  // Closed forms of the modular elements of the bicrossed product and its dual.
  std::function<double(const Point&, const Point&)> delta_m;
  std::function<double(const Point&, const Point&)> delta_m_hat;
  std::optional<bool> kac_expected;
  bool alpha_trivial = false;
  bool beta_trivial = false;

  std::string full_name() const { return format_entry_name(name, params); }
};

// s^d with the sign convention sgn(s) |s|^d.
double signed_power(double s, double d);
// (s^d - s) / (d - 1), and s log|s| at d = 1.
double twist_term(double s, double d);

const std::vector<std::string>& group_names();
std::set<std::string> group_parameter_keys(const std::string& base);

// Defaults: n=2, d=-1, b=0 (b=1 when d=1), r=1/2, a=-1. Throws
// std::invalid_argument on unknown names, keys or out-of-range values.
GroupMatchedPair make_group_pair(const std::string& base, const Params& params = {});
GroupMatchedPair group_pair(std::string_view full_name);
std::vector<GroupMatchedPair> catalog_group_pairs();

}  // namespace bicross
