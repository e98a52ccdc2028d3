#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "bicross/bialgebra_catalog.hpp"
#include "bicross/cohomology.hpp"
#include "bicross/suite.hpp"

namespace bicross {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scalar overrides given as text on the command line.
struct OverrideFlags {
  std::string d, b, r, a, lambda;

  void add_to(CLI::App* app, bool with_lambda) {
    app->add_option("--d", d, "parameter d");
    app->add_option("--b", b, "parameter b");
    app->add_option("--r", r, "parameter r");
    app->add_option("--a", a, "parameter a");
    if (with_lambda) app->add_option("--lambda", lambda, "cocycle scale (accepts 4/pi, 2*pi, ...)");
  }
  Params params() const {
    Params p;
    for (auto [k, v] : {std::pair{"d", &d}, {"b", &b}, {"r", &r}, {"a", &a}})
      if (!v->empty()) p[k] = parse_scalar(*v);
    return p;
  }
};

std::string with_params(const std::string& entry, const Params& overrides) {
  if (overrides.empty()) return entry;
  RunConfig rc;
  rc.entries = {entry};
  rc.overrides = overrides;
  return resolve_entries(rc).front();
}

fs::path report_path(const std::string& p) {
  fs::path path(p);
  const char* dir = std::getenv("BICROSS_REPORT_DIR");
  if (path.is_relative() && dir && *dir) return fs::path(dir) / path;
  return path;
}

void write_json_file(const std::string& p, const Json& j) {
  fs::path path = report_path(p);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << "\n";
}

Json read_json_file(const std::string& p) {
  fs::path path(p);
  if (!fs::exists(path)) path = report_path(p);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + p);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(p + ": " + e.what());
  }
}

std::string coefficient_term(const Scalar& c, const std::string& what, bool first) {
  std::string s;
  if (c < 0)
    s = first ? "-" : " - ";
  else if (!first)
    s = " + ";
  Scalar m = abs(c);
  if (m != 1) s += to_string(m) + " ";
  return s + what;
}

std::string combination(const Vector& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) s += coefficient_term(v[k], labels[k], s.empty());
  return s.empty() ? "0" : s;
}

std::string algebra_text(const LieAlgebra& g) {
  std::ostringstream os;
  const auto& l = g.labels();
  bool any = false;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vector v = g.basis_bracket(i, j);
      if (is_zero(v)) continue;
      os << "  [" << l[i] << ", " << l[j] << "] = " << combination(v, l) << "\n";
      any = true;
    }
  if (!any) os << "  abelian\n";
  return os.str();
}

std::string bialgebra_text(const LieBialgebra& b) {
  std::ostringstream os;
  const auto& l = b.labels();
  os << "brackets\n" << algebra_text(b.algebra()) << "cobracket (u^v = u(x)v - v(x)u)\n";
  for (std::size_t i = 0; i < b.dim(); ++i) {
    std::string s;
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = j + 1; k < b.dim(); ++k)
        if (b.cob(i, j, k) != 0) s += coefficient_term(b.cob(i, j, k), l[j] + "^" + l[k], s.empty());
    os << "  delta(" << l[i] << ") = " << (s.empty() ? "0" : s) << "\n";
  }
  return os.str();
}

std::string form_text(const TwoCocycle& u, const std::vector<std::string>& l) {
  std::string s;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (u.form(i, j) != 0)
        s += (s.empty() ? "" : ", ") + std::string("U(") + l[i] + "," + l[j] + ") = " + to_string(u.form(i, j));
  return s.empty() ? "0" : s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// --- commands -------------------------------------------------------------

int cmd_catalog(const std::string& filter, bool json, std::ostream& out) {
  static const std::regex allowed(R"([A-Za-z0-9+./?=&*_\-]*)");
  if (!std::regex_match(filter, allowed)) throw UsageError("bad filter: " + filter);
  auto keep = [&](const std::string& n) { return n.find(filter) != std::string::npos; };
  Json algebras = Json::array(), groups = Json::array(), bialgebras = Json::array();
  for (const auto& e : catalog()) {
    if (!keep(e.full_name())) continue;
    algebras.push_back({{"name", e.full_name()},
                        {"case", case_label(e.full_name())},
                        {"summary", e.summary},
                        {"group", e.group_entry},
                        {"bialgebra", e.bialgebra_entry}});
  }
  for (const auto& g : catalog_group_pairs())
    if (keep(g.full_name()))
      groups.push_back({{"name", g.full_name()}, {"case", case_label(g.full_name())}, {"summary", g.summary}});
  for (const auto& b : catalog_bialgebras())
    if (keep(b.full_name()))
      bialgebras.push_back({{"name", b.full_name()},
                            {"case", case_label(b.full_name())},
                            {"summary", b.summary},
                            {"samples", bialgebra_samples(b.name).size()}});
  if (json) {
    emit(out, {{"algebras", algebras}, {"groups", groups}, {"bialgebras", bialgebras}});
    return 0;
  }
  auto section = [&](const char* title, const Json& items) {
    if (items.empty()) return;
    out << title << " (" << items.size() << ")\n";
    for (const auto& i : items)
      out << "  " << std::left << std::setw(34) << i["name"].get<std::string>() << std::setw(24)
          << i["case"].get<std::string>() << i["summary"].get<std::string>() << "\n";
  };
  section("matched pairs of Lie algebras", algebras);
  section("matched pairs of Lie groups", groups);
  section("Lie bialgebras", bialgebras);
  return 0;
}

int cmd_verify(RunConfig cfg, bool json, const std::string& output, std::ostream& out) {
  Report r = verify(cfg);
  Json j = report_json(r);
  if (!output.empty()) write_json_file(output, j);
  if (json)
    emit(out, j);
  else
    out << report_text(r);
  return r.passed() ? 0 : 1;
}

int cmd_cohomology(const std::string& entry, const Params& overrides, bool json, std::ostream& out) {
  if (entry_kind(entry) != "algebra") throw UsageError("cohomology takes a matched pair of Lie algebras");
  CatalogEntry e = catalog_entry(with_params(entry, overrides));
  CohomologyResult r = compute_cohomology(e.data);
  if (json) {
    Json j = cohomology_json(r);
    j["entry"] = e.full_name();
    j["case"] = case_label(e.full_name());
    emit(out, j);
    return 0;
  }
  const auto& l = e.data.g1.labels();
  out << e.full_name() << "  (" << case_label(e.full_name()) << ")\n"
      << "  cocycles: " << r.cocycles.size() << "  coboundaries: " << r.coboundaries.size()
      << "  ext_dim: " << r.ext_dim << "\n";
  for (const auto& u : r.cocycles) out << "  cocycle     " << form_text(u, l) << "\n";
  for (const auto& u : r.coboundaries) out << "  coboundary  " << form_text(u, l) << "\n";
  if (r.generator) out << "  generator   " << form_text(*r.generator, l) << "\n";
  return 0;
}

int cmd_kac(const std::vector<std::string>& entries, std::size_t samples, unsigned long long seed, bool json,
            std::ostream& out) {
  std::vector<std::string> names;
  if (entries.empty() || (entries.size() == 1 && entries[0] == "all"))
    for (const auto& g : catalog_group_pairs()) names.push_back(g.full_name());
  else
    for (const auto& e : entries) {
      if (entry_kind(e) != "group") throw UsageError("kac takes group entries: " + e);
      names.push_back(group_pair(e).full_name());
    }
  Json rows = Json::array();
  bool ok = true;
  for (const auto& n : names) {
    GroupMatchedPair pair = group_pair(n);
    SampleConfig sc;
    sc.count = samples;
    sc.seed = entry_seed(n, seed);
    KacReport k = kac_criterion(pair, sc);
    bool matches = !pair.kac_expected || *pair.kac_expected == k.kac();
    ok = ok && matches;
    rows.push_back({{"entry", n},
                    {"eq1", k.eq1},
                    {"eq2", k.eq2},
                    {"eq1_deviation", k.eq1_deviation},
                    {"eq2_deviation", k.eq2_deviation},
                    {"kac", k.kac()},
                    {"expected", pair.kac_expected ? Json(*pair.kac_expected) : Json(nullptr)},
                    {"delta_M_closed_form_residual", k.delta_m_residual ? Json(*k.delta_m_residual) : Json(nullptr)},
                    {"status", matches ? "pass" : "fail"}});
  }
  if (json) {
    emit(out, {{"kac", rows}});
  } else {
    out << std::left << std::setw(24) << "entry" << std::setw(6) << "eq1" << std::setw(6) << "eq2" << std::setw(14)
        << "eq1 dev" << std::setw(10) << "expected" << "status\n";
    for (const auto& r : rows) {
      std::ostringstream dev;
      dev << std::setprecision(3) << r["eq1_deviation"].get<double>();
      std::string expected = r["expected"].is_null() ? "-" : (r["expected"].get<bool>() ? "kac" : "not kac");
      out << std::setw(24) << r["entry"].get<std::string>() << std::setw(6) << (r["eq1"].get<bool>() ? "yes" : "no")
          << std::setw(6) << (r["eq2"].get<bool>() ? "yes" : "no") << std::setw(14) << dev.str() << std::setw(10)
          << expected << r["status"].get<std::string>() << "\n";
    }
  }
  return ok ? 0 : 1;
}

std::string cocycle_group_entry(const std::string& entry, const Params& overrides) {
  std::string e = with_params(entry, overrides);
  if (entry_kind(e) == "group") return e;
  if (entry_kind(e) != "algebra") throw UsageError("no cocycle recipe for " + e);
  auto g = cocycle_entry_for_algebra(e);
  if (!g) throw UsageError("no cocycle recipe for " + e);
  return *g;
}

CocycleMode pick_mode(const std::string& mode, const std::string& entry) {
  if (!mode.empty()) return parse_mode(mode);
  return cocycle_spec(entry, 1).closed_form ? CocycleMode::Closed : CocycleMode::Pv;
}

Json cocycle_json(const CocycleReport& r) {
  return {{"entry", r.entry},
          {"lambda", r.lambda},
          {"mode", mode_name(r.mode)},
          {"max_residual", r.max_residual()},
          {"product_residual", r.product_residual},
          {"flow_residual", r.flow_residual},
          {"base_residual", r.base_residual},
          {"samples", r.samples},
          {"skipped", r.skipped},
          {"tol", r.tol},
          {"passed", r.passed()}};
}

int cmd_cocycle_check(const std::string& entry, const Params& overrides, const std::string& lambda_text,
                      const std::string& mode_text, std::size_t samples, unsigned long long seed,
                      std::optional<double> tol, bool json, std::ostream& out) {
  std::string g = cocycle_group_entry(entry, overrides);
  double lambda = lambda_text.empty() ? default_cocycle_lambda(g) : parse_real(lambda_text);
  CocycleMode mode = pick_mode(mode_text, g);
  SampleConfig sc;
  sc.count = samples;
  sc.seed = entry_seed(g, seed);
  CocycleReport r = check_group_cocycle(cocycle_spec(g, lambda, mode), group_pair(g), sc, tol);
  if (json) {
    emit(out, cocycle_json(r));
  } else {
    out << r.entry << "  (" << case_label(r.entry) << ")  lambda " << r.lambda << "  " << mode_name(r.mode) << "\n"
        << "  product identity " << r.product_residual << "\n  flow identity    " << r.flow_residual
        << "\n  base point       " << r.base_residual << "\n  samples " << r.samples << ", skipped " << r.skipped
        << ", tol " << r.tol << "\n  " << (r.passed() ? "cocycle" : "not a cocycle") << "\n";
  }
  return r.passed() ? 0 : 1;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) grid.push_back(parse_real(item));
  if (grid.empty()) throw UsageError("empty grid");
  return grid;
}

int cmd_cocycle_scan(const std::string& entry, const Params& overrides, const std::string& grid_text,
                     const std::string& mode_text, std::size_t samples, unsigned long long seed, bool json,
                     std::ostream& out) {
  std::string g = cocycle_group_entry(entry, overrides);
  std::vector<double> grid = grid_text.empty() ? std::vector<double>{-8 / M_PI, -4 / M_PI, 0, 4 / M_PI, 8 / M_PI, 1, 2}
                                               : parse_grid(grid_text);
  CocycleMode mode = pick_mode(mode_text, g);
  GroupMatchedPair pair = group_pair(g);
  SampleConfig sc;
  sc.count = samples;
  sc.seed = entry_seed(g, seed);
  Json rows = Json::array();
  Json passing = Json::array();
  for (double lambda : grid) {
    CocycleReport r = check_group_cocycle(cocycle_spec(g, lambda, mode), pair, sc);
    rows.push_back({{"lambda", lambda}, {"max_residual", r.max_residual()}, {"passed", r.passed()}});
    if (r.passed()) passing.push_back(lambda);
  }
  if (json) {
    emit(out, {{"entry", g}, {"mode", mode_name(mode)}, {"grid", rows}, {"passing", passing}});
    return 0;
  }
  out << g << "  (" << case_label(g) << ")  " << mode_name(mode) << "\n";
  for (const auto& r : rows) {
    double l = r["lambda"].get<double>();
    out << "  lambda " << std::setw(12) << l << "  (" << std::setw(10) << l * M_PI / 4 << " x 4/pi)  residual "
        << std::setw(12) << r["max_residual"].get<double>() << "  " << (r["passed"].get<bool>() ? "cocycle" : "-")
        << "\n";
  }
  return 0;
}

int cmd_bialgebra_dual(const std::string& name, bool json, std::ostream& out) {
  if (entry_kind(name) != "bialgebra") throw UsageError("not a bialgebra entry: " + name);
  BialgebraEntry e = bialgebra_entry(name);
  LieBialgebra d = dual(e.bialgebra);
  if (json) {
    Json j = bialgebra_json(d);
    j["name"] = "dual of " + e.full_name();
    emit(out, j);
    return 0;
  }
  out << "dual of " << e.full_name() << "\n" << bialgebra_text(d);
  return 0;
}

int cmd_report(const std::vector<std::string>& paths, const std::string& output, std::ostream& out,
               std::ostream& err) {
  std::vector<Report> parts;
  for (const auto& p : paths) {
    Json j = read_json_file(p);
    try {
      parts.push_back(report_from_json(j));
    } catch (const std::exception& e) {
      throw UsageError(p + ": schema mismatch: " + e.what());
    }
  }
  std::vector<std::string> dups;
  Json j = report_json(merge_reports(parts, &dups));
  for (const auto& d : dups) err << "warning: duplicate entry " << d << "; keeping the later report\n";
  if (!output.empty())
    write_json_file(output, j);
  else
    emit(out, j);
  return 0;
}

}  // namespace

double parse_real(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.empty()) throw UsageError("empty number");
  auto ends = [&](const std::string& suffix) {
    return t.size() >= suffix.size() && t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (t == "pi") return M_PI;
  if (t == "-pi") return -M_PI;
  if (ends("/pi")) return parse_real(t.substr(0, t.size() - 3)) / M_PI;
  if (ends("*pi")) return parse_real(t.substr(0, t.size() - 3)) * M_PI;
  try {
    return to_double(parse_scalar(t));
  } catch (const std::exception&) {
    throw UsageError("not a number: " + text);
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matched pairs, bicrossed products and their cocycles", "bicross"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* catalog_cmd = app.add_subcommand("catalog", "list the shipped entries");
  std::string filter;
  catalog_cmd->add_option("filter", filter, "substring of the entry name");

  auto add_run_flags = [](CLI::App* c, RunConfig& rc, std::string& tol) {
    c->add_option("--samples", rc.samples, "sample points per group check");
    c->add_option("--seed", rc.seed, "random seed");
    c->add_option("--tol", tol, "tolerance of the group identities");
  };

  auto* verify_cmd = app.add_subcommand("verify", "run every check for the named entries (or all)");
  RunConfig rc;
  std::vector<std::string> positional, flagged;
  std::string tol_text, output;
  OverrideFlags ov;
  verify_cmd->add_option("entries", positional, "entry names or 'all'");
  verify_cmd->add_option("--entry", flagged, "entry name (repeatable)");
  add_run_flags(verify_cmd, rc, tol_text);
  ov.add_to(verify_cmd, true);
  verify_cmd->add_option("--output", output, "also write the JSON report here (relative to $BICROSS_REPORT_DIR)");

  auto* coh_cmd = app.add_subcommand("cohomology", "2-cocycles, coboundaries and the extension group");
  std::string coh_entry;
  coh_cmd->add_option("entry", coh_entry)->required();
  ov.add_to(coh_cmd, false);

  auto* kac_cmd = app.add_subcommand("kac", "Kac criterion for group pairs");
  std::vector<std::string> kac_entries;
  kac_cmd->add_option("entries", kac_entries, "group entries (default all)");
  kac_cmd->add_option("--samples", rc.samples);
  kac_cmd->add_option("--seed", rc.seed);

  auto* coc_cmd = app.add_subcommand("cocycle", "group 2-cocycles");
  coc_cmd->require_subcommand(1);
  std::string coc_entry, mode_text, grid_text;
  auto* check_cmd = coc_cmd->add_subcommand("check", "check the cocycle identities at one lambda");
  check_cmd->add_option("entry", coc_entry)->required();
  ov.add_to(check_cmd, true);
  check_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"closed", "pv"}));
  add_run_flags(check_cmd, rc, tol_text);
  auto* scan_cmd = coc_cmd->add_subcommand("scan", "check the identities over a lambda grid");
  scan_cmd->add_option("entry", coc_entry)->required();
  ov.add_to(scan_cmd, false);
  scan_cmd->add_option("--grid", grid_text, "comma separated, e.g. 0,4/pi,-8/pi,1");
  scan_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"closed", "pv"}));
  scan_cmd->add_option("--samples", rc.samples);
  scan_cmd->add_option("--seed", rc.seed);

  auto* group_cmd = app.add_subcommand("group", "group pairs");
  group_cmd->require_subcommand(1);
  auto* gverify_cmd = group_cmd->add_subcommand("verify", "identities, algebra match, Kac and cocycle checks");
  std::string group_entry;
  gverify_cmd->add_option("entry", group_entry)->required();
  add_run_flags(gverify_cmd, rc, tol_text);
  ov.add_to(gverify_cmd, true);

  auto* bialg_cmd = app.add_subcommand("bialgebra", "Lie bialgebras");
  bialg_cmd->require_subcommand(1);
  std::string bialg_name;
  auto* bverify_cmd = bialg_cmd->add_subcommand("verify", "axioms, dual and listed correspondences");
  bverify_cmd->add_option("name", bialg_name)->required();
  auto* bdual_cmd = bialg_cmd->add_subcommand("dual", "print the dual bialgebra");
  bdual_cmd->add_option("name", bialg_name)->required();

  auto* report_cmd = app.add_subcommand("report", "merge JSON reports");
  std::vector<std::string> paths;
  report_cmd->add_option("paths", paths, "report files");
  report_cmd->add_option("--output", output, "write the merged report here");

  for (auto* c : {catalog_cmd, verify_cmd, coh_cmd, kac_cmd, check_cmd, scan_cmd, gverify_cmd, bverify_cmd, bdual_cmd})
    c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  bool json = format == "json";
  try {
    std::optional<double> tol;
    if (!tol_text.empty()) tol = parse_real(tol_text);
    Params overrides = ov.params();
    if (*catalog_cmd) return cmd_catalog(filter, json, out);
    if (*verify_cmd || *gverify_cmd || *bverify_cmd) {
      rc.tol = tol;
      rc.overrides = overrides;
      if (!ov.lambda.empty()) rc.lambda = parse_real(ov.lambda);
      if (*verify_cmd) {
        rc.entries = positional;
        rc.entries.insert(rc.entries.end(), flagged.begin(), flagged.end());
      } else if (*gverify_cmd) {
        if (entry_kind(group_entry) != "group") throw UsageError("not a group entry: " + group_entry);
        rc.entries = {group_entry};
      } else {
        if (entry_kind(bialg_name) != "bialgebra") throw UsageError("not a bialgebra entry: " + bialg_name);
        rc.entries = {bialg_name};
      }
      return cmd_verify(rc, json, output, out);
    }
    if (*coh_cmd) return cmd_cohomology(coh_entry, overrides, json, out);
    if (*kac_cmd) return cmd_kac(kac_entries, rc.samples, rc.seed, json, out);
    if (*check_cmd)
      return cmd_cocycle_check(coc_entry, overrides, ov.lambda, mode_text, rc.samples, rc.seed, tol, json, out);
    if (*scan_cmd) return cmd_cocycle_scan(coc_entry, overrides, grid_text, mode_text, rc.samples, rc.seed, json, out);
    if (*bdual_cmd) return cmd_bialgebra_dual(bialg_name, json, out);
    if (*report_cmd) return cmd_report(paths, output, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bicross
