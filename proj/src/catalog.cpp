#include "bicross/catalog.hpp"

#include <map>
#include <stdexcept>

namespace bicross {

namespace {

const std::vector<std::string> kOneDim = {"X"};
const std::vector<std::string> kTwoDim = {"X", "Y"};

NPlus1Data make_data(const std::vector<std::string>& labels, const std::vector<BracketRule>& rules,
                     const std::vector<Term>& chi, const std::vector<std::vector<Term>>& beta_images) {
  NPlus1Data d;
  d.g1 = LieAlgebra::from_brackets(labels, rules);
  d.chi = d.g1.vector(chi);
  std::vector<Vector> cols;
  for (const auto& img : beta_images) cols.push_back(d.g1.vector(img));
  d.beta = Matrix::from_columns(labels.size(), cols);
  return d;
}

Scalar get(const Params& p, const std::string& key) { return p.at(key); }

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "1+1/1", "1+1/2", "1+1/3", "1+1/4", "2+1/1.1", "2+1/1.2", "2+1/2.1", "2+1/2.2",
      "2+1/2.3", "2+1/2.4", "2+1/2.5", "2+1/3",   "2+1/4.1", "2+1/4.2", "2+1/4.3"};
  return names;
}

std::set<std::string> catalog_parameter_keys(const std::string& base) {
  if (base == "2+1/2.1") return {"r"};
  if (base == "2+1/3" || base == "2+1/4.3") return {"a"};
  if (base == "2+1/4.1") return {"d", "b"};
  if (base == "2+1/4.2") return {"d"};
  for (const auto& n : catalog_names())
    if (n == base) return {};
  throw std::invalid_argument("unknown catalog entry: " + base);
}

CatalogEntry make_catalog_entry(const std::string& base, const Params& given, CatalogOptions opts) {
  std::set<std::string> keys = catalog_parameter_keys(base);
  for (const auto& [k, v] : given)
    if (!keys.count(k)) throw std::invalid_argument("unknown parameter '" + k + "' for " + base);
  Params p = given;
  if (keys.count("d") && !p.count("d")) p["d"] = -1;
  if (keys.count("b") && !p.count("b")) p["b"] = p["d"] == 1 ? 1 : 0;
  if (keys.count("r") && !p.count("r")) p["r"] = ratio(1, 2);
  if (keys.count("a") && !p.count("a")) p["a"] = -1;

  CatalogEntry e;
  e.name = base;
  e.params = p;
  if (base == "1+1/1") {
    e.summary = "chi=0, beta=0";
    e.data = make_data(kOneDim, {}, {}, {{}});
  } else if (base == "1+1/2") {
    e.summary = "chi=0, beta(X)=X";
    e.data = make_data(kOneDim, {}, {}, {{{"X", 1}}});
  } else if (base == "1+1/3") {
    e.summary = "chi(X)=1, beta=0";
    e.data = make_data(kOneDim, {}, {{"X", 1}}, {{}});
  } else if (base == "1+1/4") {
    e.summary = "chi(X)=1, beta(X)=X";
    e.data = make_data(kOneDim, {}, {{"X", 1}}, {{{"X", 1}}});
    e.group_entry = "group/1+1";
    e.bialgebra_entry = "bialg/1+1";
  } else if (base == "2+1/1.1") {
    e.summary = "chi=0, beta=0, [X,Y]=0";
    e.data = make_data(kTwoDim, {}, {}, {{}, {}});
    e.group_entry = "group/split-1.1";
  } else if (base == "2+1/1.2") {
    e.summary = "chi=0, beta=0, [X,Y]=Y";
    e.data = make_data(kTwoDim, {{"X", "Y", {{"Y", 1}}}}, {}, {{}, {}});
  } else if (base == "2+1/2.1") {
    Scalar r = get(p, "r");
    if (!opts.allow_redundant_r && (r < -1 || r > 1))
      throw std::invalid_argument("case 2.1 requires -1 <= r <= 1, got r=" + to_string(r));
    e.summary = "chi=0, [X,Y]=0, beta(X)=X, beta(Y)=rY";
    e.data = make_data(kTwoDim, {}, {}, {{{"X", 1}}, {{"Y", r}}});
    e.group_entry = format_entry_name("group/split-2.1", {{"r", r}});
  } else if (base == "2+1/2.2") {
    e.summary = "chi=0, [X,Y]=0, beta(X)=X+Y, beta(Y)=Y";
    e.data = make_data(kTwoDim, {}, {}, {{{"X", 1}, {"Y", 1}}, {{"Y", 1}}});
  } else if (base == "2+1/2.3") {
    e.summary = "chi=0, [X,Y]=0, beta(X)=Y, beta(Y)=0";
    e.data = make_data(kTwoDim, {}, {}, {{{"Y", 1}}, {}});
    e.group_entry = "group/split-2.3";
  } else if (base == "2+1/2.4") {
    e.summary = "chi=0, [X,Y]=Y, beta(X)=Y, beta(Y)=0";
    e.data = make_data(kTwoDim, {{"X", "Y", {{"Y", 1}}}}, {}, {{{"Y", 1}}, {}});
  } else if (base == "2+1/2.5") {
    e.summary = "chi=0, [X,Y]=Y, beta(X)=0, beta(Y)=Y";
    e.data = make_data(kTwoDim, {{"X", "Y", {{"Y", 1}}}}, {}, {{}, {{"Y", 1}}});
  } else if (base == "2+1/3") {
    Scalar a = get(p, "a");
    e.summary = "beta=0, [X,Y]=aY, chi(X)=1, chi(Y)=0";
    e.data = make_data(kTwoDim, {{"X", "Y", {{"Y", a}}}}, {{"X", 1}}, {{}, {}});
    e.group_entry = format_entry_name("group/split-3", {{"a", a}});
  } else if (base == "2+1/4.1") {
    Scalar d = get(p, "d"), b = get(p, "b");
    if (d != 1 && b != 0) throw std::invalid_argument("case 4.1 requires b=0 unless d=1");
    e.summary = "chi(X)=1, chi(Y)=0, [X,Y]=dY, beta(X)=X+bY, beta(Y)=dY";
    e.data = make_data(kTwoDim, {{"X", "Y", {{"Y", d}}}}, {{"X", 1}}, {{{"X", 1}, {"Y", b}}, {{"Y", d}}});
    e.group_entry = format_entry_name("group/4.1", {{"b", b}, {"d", d}});
    e.bialgebra_entry = format_entry_name("bialg/4.1", {{"b", b}, {"d", d}});
  } else if (base == "2+1/4.2") {
    Scalar d = get(p, "d");
    e.summary = "chi(X)=1, chi(Y)=0, [X,Y]=dY, beta(X)=Y, beta(Y)=0";
    e.data = make_data(kTwoDim, {{"X", "Y", {{"Y", d}}}}, {{"X", 1}}, {{{"Y", 1}}, {}});
    e.group_entry = format_entry_name("group/4.2", {{"d", d}});
    e.bialgebra_entry = format_entry_name("bialg/4.2", {{"d", d}});
  } else if (base == "2+1/4.3") {
    Scalar a = get(p, "a");
    if (a != 1 && a != 0 && a != -1) throw std::invalid_argument("case 4.3 requires a in {1, 0, -1}");
    e.summary = "chi(X)=1, chi(Y)=0, [X,Y]=-Y, beta(X)=aY, beta(Y)=X";
    e.data = make_data(kTwoDim, {{"X", "Y", {{"Y", -1}}}}, {{"X", 1}}, {{{"Y", a}}, {{"X", 1}}});
    const char* suffix = a == 1 ? "4.3+" : (a == 0 ? "4.3=0" : "4.3-");
    e.group_entry = std::string("group/") + suffix;
    e.bialgebra_entry = std::string("bialg/") + suffix;
  }
  return e;
}

CatalogEntry catalog_entry(std::string_view full_name, CatalogOptions opts) {
  EntryName n = parse_entry_name(full_name);
  return make_catalog_entry(n.base, parse_params(n, catalog_parameter_keys(n.base)), opts);
}

std::vector<CatalogEntry> catalog(const Params& overrides, CatalogOptions opts) {
  std::vector<CatalogEntry> out;
  for (const auto& name : catalog_names()) {
    Params p;
    for (const auto& key : catalog_parameter_keys(name))
      if (overrides.count(key)) p[key] = overrides.at(key);
    out.push_back(make_catalog_entry(name, p, opts));
  }
  return out;
}

}  // namespace bicross
