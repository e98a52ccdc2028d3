#include "bicross/suite.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bicross/bialgebra_catalog.hpp"
#include "bicross/cohomology.hpp"

namespace bicross {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

std::string case_label(const std::string& name) {
  std::string base = parse_entry_name(name).base;
  auto slash = base.find('/');
  std::string head = base.substr(0, slash), tail = base.substr(slash + 1);
  if (head == "group") return "group pair " + tail;
  if (head == "bialg") return "bialgebra " + tail;
  return head + " case " + tail;
}

namespace {

Params apply_overrides(const std::string& name, const EntryName& parsed, const Params& overrides,
                       const std::set<std::string>& keys, bool strict) {
  Params p = parse_params(parsed, keys);
  for (const auto& [k, v] : overrides) {
    if (keys.count(k))
      p[k] = v;
    else if (strict)
      throw std::invalid_argument("override --" + k + " does not apply to " + name);
  }
  return p;
}

std::string resolve_one(const std::string& name, const Params& overrides, bool strict) {
  EntryName parsed = parse_entry_name(name);
  std::string kind = entry_kind(parsed.base);
  if (kind == "group") {
    Params p = apply_overrides(name, parsed, overrides, group_parameter_keys(parsed.base), strict);
    return make_group_pair(parsed.base, p).full_name();
  }
  if (kind == "bialgebra") {
    Params p = apply_overrides(name, parsed, overrides, bialgebra_parameter_keys(parsed.base), strict);
    // A bare base name stands for every shipped sample.
    if (p.empty()) {
      make_bialgebra_entry(parsed.base);
      return parsed.base;
    }
    return make_bialgebra_entry(parsed.base, p).full_name();
  }
  Params p = apply_overrides(name, parsed, overrides, catalog_parameter_keys(parsed.base), strict);
  return make_catalog_entry(parsed.base, p).full_name();
}

SampleConfig sample_config(const std::string& entry, const RunConfig& cfg) {
  SampleConfig s;
  s.count = cfg.samples;
  s.seed = entry_seed(entry, cfg.seed);
  s.tol = cfg.tol.value_or(1e-9);
  return s;
}

Json failures_json(const CheckReport& r, std::size_t limit = 10) {
  Json a = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < limit; ++i) a.push_back(r.failures[i]);
  return a;
}

CheckResult group_identities(const GroupMatchedPair& pair, const SampleConfig& sc, const std::string& label) {
  ResidualReport r = check_group_matched_pair(pair, sc);
  CheckResult c{"group_identities", label, r.ok(), "worst residual " + fmt(r.worst()), {}};
  c.payload = {{"identity_residuals", r.max_residual}, {"samples", r.samples}, {"tol", r.tol}};
  return c;
}

CheckResult algebra_match(const GroupMatchedPair& pair, const std::string& label) {
  InfinitesimalEstimate est = infinitesimal_data(pair);
  CheckResult c{"algebra_match", label, true, "", {}};
  Json matches = Json::array();
  double worst = 0;
  for (const auto& m : pair.matches) {
    MatchReport r = match_to_catalog(est, m);
    c.passed = c.passed && r.ok();
    worst = std::max(worst, r.deviation);
    matches.push_back({{"label", m.label}, {"catalog", m.catalog_name}, {"deviation", r.deviation}, {"tol", r.tol}});
  }
  c.detail = std::to_string(pair.matches.size()) + " maps, worst deviation " + fmt(worst);
  c.payload = {{"matches", matches}, {"finite_difference_error", est.error}};
  return c;
}

CheckResult kac_check(const GroupMatchedPair& pair, const SampleConfig& sc, const std::string& label) {
  KacReport k = kac_criterion(pair, sc);
  CheckResult c{"kac", label, true, "", {}};
  bool closed_ok = !k.delta_m_residual || *k.delta_m_residual <= 1e-9;
  if (pair.kac_expected) {
    bool expected = *pair.kac_expected;
    c.passed = k.kac() == expected && (expected || k.eq1_deviation >= 1e-2);
  }
  c.passed = c.passed && closed_ok;
  c.detail = std::string("kac ") + (k.kac() ? "holds" : "fails") + ", eq1 deviation " + fmt(k.eq1_deviation) +
             (pair.kac_expected ? std::string(", expected ") + (*pair.kac_expected ? "holds" : "fails") : "");
  c.payload = {{"eq1", k.eq1},
               {"eq2", k.eq2},
               {"eq1_deviation", k.eq1_deviation},
               {"eq2_deviation", k.eq2_deviation},
               {"kac", k.kac()},
               {"expected", pair.kac_expected ? Json(*pair.kac_expected) : Json(nullptr)},
               {"delta_M_closed_form_residual", k.delta_m_residual ? Json(*k.delta_m_residual) : Json(nullptr)},
               {"delta_M_hat_closed_form_residual",
                k.delta_m_hat_residual ? Json(*k.delta_m_hat_residual) : Json(nullptr)},
               {"delta_M_unit_deviation", k.delta_m_unit_deviation},
               {"modular_oracle_residual", k.modular_oracle_residual},
               {"samples", k.samples}};
  return c;
}

std::optional<CheckResult> cocycle_check(const GroupMatchedPair& pair, const RunConfig& cfg, const SampleConfig& sc,
                                         const std::string& label) {
  std::string entry = pair.full_name();
  CocycleSpec spec;
  try {
    spec = cocycle_spec(entry, 1);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  double lambda = cfg.lambda.value_or(default_cocycle_lambda(entry));
  CocycleMode mode = spec.closed_form ? CocycleMode::Closed : CocycleMode::Pv;
  CocycleReport r = check_group_cocycle(cocycle_spec(entry, lambda, mode), pair, sc);
  bool expected = cocycle_expected(entry, lambda);
  CheckResult c{"cocycle", label, r.passed() == expected, "", {}};
  c.detail = "lambda " + fmt(lambda) + " " + mode_name(mode) + ", residual " + fmt(r.max_residual()) + ", " +
             (r.passed() ? "cocycle" : "not a cocycle") + (expected ? "" : " (expected)");
  c.payload = {{"entry", entry},
               {"lambda", lambda},
               {"mode", mode_name(mode)},
               {"max_residual", r.max_residual()},
               {"product_residual", r.product_residual},
               {"flow_residual", r.flow_residual},
               {"base_residual", r.base_residual},
               {"passed", r.passed()},
               {"expected", expected},
               {"samples", r.samples},
               {"skipped", r.skipped},
               {"tol", r.tol}};
  return c;
}

CheckResult torus_check(const GroupMatchedPair& pair, const RunConfig& cfg, const SampleConfig& sc,
                        const std::string& label) {
  double lambda = cfg.lambda.value_or(default_cocycle_lambda(pair.full_name()));
  std::mt19937_64 rng(sc.seed);
  std::size_t n = std::min<std::size_t>(sc.count, 100), done = 0;
  double worst = 0;
  for (std::size_t k = 0; k < 50 * n && done < n; ++k) {
    Point g = pair.g1.sample(rng, sc), h = pair.g1.sample(rng, sc);
    if (g[0] <= 0 || h[0] <= 0) continue;
    worst = std::max(worst, torus_obstruction(g[0], g[1], h[0], h[1], 1).difference);
    ++done;
  }
  SampleConfig wc = sc;
  wc.count = std::min<std::size_t>(sc.count, 50);
  double witness = torus_witness(lambda, wc);
  CheckResult c{"torus_obstruction", label, done == n && worst <= 1e-5, "", {}};
  c.detail = "quadrature vs potential " + fmt(worst) + ", witness at lambda " + fmt(lambda) + " " + fmt(witness);
  c.payload = {{"max_difference", worst}, {"samples", done}, {"lambda", lambda}, {"witness", witness}, {"tol", 1e-5}};
  return c;
}

std::vector<CheckResult> group_checks(const GroupMatchedPair& pair, const RunConfig& cfg) {
  std::string label = case_label(pair.full_name());
  SampleConfig sc = sample_config(pair.full_name(), cfg);
  std::vector<CheckResult> out;
  out.push_back(group_identities(pair, sc, label));
  out.push_back(algebra_match(pair, label));
  out.push_back(kac_check(pair, sc, label));
  if (auto c = cocycle_check(pair, cfg, sc, label)) out.push_back(*c);
  if (pair.name == "group/4.3-") out.push_back(torus_check(pair, cfg, sc, label));
  return out;
}

std::vector<CheckResult> algebra_checks(const CatalogEntry& e, const RunConfig& cfg) {
  std::string label = case_label(e.full_name());
  std::vector<CheckResult> out;

  JacobiReport jr = check_jacobi(build_ambient(e.data));
  out.push_back({"jacobi", label, jr.ok(), std::to_string(jr.violations.size()) + " violations",
                 {{"violations", jr.violations.size()}}});

  CheckReport mp = check_matched_pair(ambient_pair(e.data));
  mp.merge(check_nplus1(e.data), "nplus1: ");
  out.push_back({"matched_pair", label, mp.ok(), std::to_string(mp.failures.size()) + " failed clauses",
                 {{"failures", failures_json(mp)}}});

  CohomologyResult coh = compute_cohomology(e.data);
  std::size_t expected = expected_extension_dim(e);
  CheckResult ch{"cohomology", label, coh.ext_dim == expected,
                 "ext_dim " + std::to_string(coh.ext_dim) + " (expected " + std::to_string(expected) + ")",
                 cohomology_json(coh)};
  ch.payload["expected_ext_dim"] = expected;
  out.push_back(ch);

  TwoCocycle u = coh.generator ? *coh.generator : zero_cocycle(e.data.g1.dim());
  CheckReport bp;
  for (const Scalar& lambda : {Scalar(1), ratio(-1, 2), Scalar(3)})
    bp.merge(check_bialgebra(bicrossed_product(e.data, u, lambda)), "lambda " + to_string(lambda) + ": ");
  out.push_back({"bicrossed_bialgebra", label, bp.ok(), std::to_string(bp.failures.size()) + " failed clauses",
                 {{"failures", failures_json(bp)}, {"lambdas", {"1", "-1/2", "3"}}}});

  if (!e.group_entry.empty())
    for (auto& c : group_checks(group_pair(e.group_entry), cfg)) out.push_back(std::move(c));
  return out;
}

bool is_listed_dual(const std::string& base) { return !base.empty() && base.back() == '*'; }

std::vector<CheckResult> bialgebra_checks(const std::string& name) {
  EntryName parsed = parse_entry_name(name);
  std::vector<Params> samples;
  if (parsed.params.empty())
    samples = bialgebra_samples(parsed.base);
  else
    samples.push_back(parse_params(parsed, bialgebra_parameter_keys(parsed.base)));
  std::string label = case_label(name);

  CheckReport axioms, duals, corr, product;
  bool has_corr = false, has_product = false;
  for (const Params& p : samples) {
    BialgebraEntry e = make_bialgebra_entry(parsed.base, p);
    std::string tag = e.full_name() + ": ";
    axioms.merge(check_bialgebra(e.bialgebra), tag);
    LieBialgebra d = dual(e.bialgebra);
    duals.merge(check_bialgebra(d), tag + "dual: ");
    duals.require(dual(d) == e.bialgebra, tag + "dual is not an involution");
    if (!e.partner.empty()) {
      has_corr = true;
      BialgebraEntry partner = bialgebra_entry(e.partner);
      const LieBialgebra& primal = is_listed_dual(parsed.base) ? partner.bialgebra : e.bialgebra;
      const LieBialgebra& listed = is_listed_dual(parsed.base) ? e.bialgebra : partner.bialgebra;
      corr.require(match_dual(primal, listed).ok(), tag + "listed dual does not match");
    } else if (auto sd = self_duality(e)) {
      has_corr = true;
      BialgebraEntry partner = bialgebra_entry(sd->partner);
      corr.require(determinant(sd->map) != 0 && is_bialgebra_morphism(d, partner.bialgebra, sd->map),
                   tag + "self-duality map fails");
    }
    if (e.data) {
      has_product = true;
      std::size_t n = e.data->g1.dim();
      TwoCocycle u = n == 2 ? elementary_cocycle(2, 0, 1, -1) : zero_cocycle(n);
      Scalar lambda = p.count("lambda") ? p.at("lambda") : Scalar(1);
      product.require(bicrossed_product(*e.data, u, lambda) == e.bialgebra, tag + "bicrossed product differs");
    }
  }
  std::string n = std::to_string(samples.size()) + " samples";
  std::vector<CheckResult> out;
  out.push_back({"bialgebra_axioms", label, axioms.ok(), n, {{"samples", samples.size()}, {"failures", failures_json(axioms)}}});
  out.push_back({"dual", label, duals.ok(), n, {{"samples", samples.size()}, {"failures", failures_json(duals)}}});
  if (has_corr)
    out.push_back({"correspondence", label, corr.ok(), n, {{"samples", samples.size()}, {"failures", failures_json(corr)}}});
  if (has_product)
    out.push_back({"bicrossed_product", label, product.ok(), n,
                   {{"samples", samples.size()}, {"failures", failures_json(product)}}});
  return out;
}

Json config_json(const RunConfig& c) {
  return {{"entries", c.entries},
          {"samples", c.samples},
          {"seed", c.seed},
          {"tol", c.tol ? Json(*c.tol) : Json(nullptr)},
          {"overrides", params_json(c.overrides)},
          {"lambda", c.lambda ? Json(*c.lambda) : Json(nullptr)}};
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("report: missing field ") + key);
  return j.at(key);
}

}  // namespace

bool EntryResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool Report::passed() const { return failed_checks() == 0; }

std::size_t Report::failed_checks() const {
  std::size_t n = 0;
  for (const auto& [_, e] : entries)
    for (const auto& c : e.checks) n += !c.passed;
  return n;
}

unsigned long long entry_seed(const std::string& entry, unsigned long long seed) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char ch : entry) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ULL);
}

std::string entry_kind(const std::string& name) {
  if (name.rfind("group/", 0) == 0) return "group";
  if (name.rfind("bialg/", 0) == 0) return "bialgebra";
  return "algebra";
}

std::vector<std::string> resolve_entries(const RunConfig& cfg) {
  std::vector<std::string> out;
  auto add = [&](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  std::vector<std::string> wanted = cfg.entries.empty() ? std::vector<std::string>{"all"} : cfg.entries;
  for (const auto& w : wanted) {
    if (w != "all") {
      add(resolve_one(w, cfg.overrides, true));
      continue;
    }
    std::set<std::string> linked;
    for (const auto& base : catalog_names()) {
      std::string n = resolve_one(base, cfg.overrides, false);
      add(n);
      std::string g = catalog_entry(n).group_entry;
      if (!g.empty()) linked.insert(g);
    }
    for (const auto& base : group_names()) {
      std::string n = resolve_one(base, cfg.overrides, false);
      if (!linked.count(n)) add(n);
    }
    for (const auto& base : bialgebra_names()) add(base);
  }
  return out;
}

double default_cocycle_lambda(const std::string& group_entry) {
  return group_entry.rfind("group/4.3", 0) == 0 ? 4 / M_PI : 1.0;
}

bool cocycle_expected(const std::string& group_entry, double lambda) {
  std::string base = parse_entry_name(group_entry).base;
  if (base == "group/4.3-") return lambda == 0;
  if (base == "group/4.3+" || base == "group/4.3=0") {
    double n = lambda * M_PI / 4;
    return std::abs(n - std::round(n)) <= 1e-9;
  }
  return true;
}

std::size_t expected_extension_dim(const CatalogEntry& e) {
  const std::string& n = e.name;
  auto is = [&](const char* k, long v) { return e.params.count(k) && e.params.at(k) == v; };
  if (n == "2+1/1.1" || n == "2+1/2.1" || n == "2+1/2.2" || n == "2+1/2.3" || n == "2+1/4.3") return 1;
  if (n == "2+1/3") return is("a", -1) ? 1 : 0;
  if (n == "2+1/4.1" || n == "2+1/4.2") return is("d", -1) ? 1 : 0;
  return 0;
}

EntryResult verify_entry(const std::string& name, const RunConfig& cfg) {
  EntryResult r;
  r.entry = name;
  r.kind = entry_kind(name);
  if (r.kind == "group")
    r.checks = group_checks(group_pair(name), cfg);
  else if (r.kind == "bialgebra")
    r.checks = bialgebra_checks(name);
  else
    r.checks = algebra_checks(catalog_entry(name), cfg);
  return r;
}

Report verify(const RunConfig& cfg) {
  Report rep;
  rep.config = cfg;
  rep.config->entries = resolve_entries(cfg);
  for (const auto& n : rep.config->entries) rep.entries[n] = verify_entry(n, cfg);
  return rep;
}

Json report_json(const Report& r) {
  Json entries = Json::object();
  std::size_t checks = 0;
  for (const auto& [name, e] : r.entries) {
    Json cs = Json::array();
    for (const auto& c : e.checks) {
      cs.push_back({{"name", c.name},
                    {"case", c.label},
                    {"status", c.passed ? "pass" : "fail"},
                    {"detail", c.detail},
                    {"payload", c.payload}});
      ++checks;
    }
    entries[name] = {{"kind", e.kind}, {"passed", e.passed()}, {"checks", cs}};
  }
  Json j = {{"schema", "bicross.report"},
            {"version", kReportSchemaVersion},
            {"entries", entries},
            {"summary",
             {{"entries", r.entries.size()},
              {"checks", checks},
              {"failed", r.failed_checks()},
              {"passed", r.passed()}}}};
  if (r.config) j["config"] = config_json(*r.config);
  return j;
}

void validate_report(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("report: not an object");
  if (need(j, "schema") != "bicross.report") throw std::invalid_argument("report: wrong schema");
  if (need(j, "version") != kReportSchemaVersion) throw std::invalid_argument("report: unsupported version");
  const Json& entries = need(j, "entries");
  if (!entries.is_object()) throw std::invalid_argument("report: entries must be an object");
  std::size_t checks = 0, failed = 0;
  for (const auto& [name, e] : entries.items()) {
    const Json& kind = need(e, "kind");
    if (kind != "algebra" && kind != "group" && kind != "bialgebra")
      throw std::invalid_argument("report: bad kind for " + name);
    if (!need(e, "passed").is_boolean()) throw std::invalid_argument("report: passed must be boolean");
    const Json& cs = need(e, "checks");
    if (!cs.is_array()) throw std::invalid_argument("report: checks must be an array");
    bool all = true;
    for (const auto& c : cs) {
      if (!need(c, "name").is_string() || !need(c, "case").is_string() || !need(c, "detail").is_string())
        throw std::invalid_argument("report: malformed check in " + name);
      const Json& st = need(c, "status");
      if (st != "pass" && st != "fail") throw std::invalid_argument("report: bad status in " + name);
      if (!need(c, "payload").is_object()) throw std::invalid_argument("report: payload must be an object");
      all = all && st == "pass";
      failed += st == "fail";
      ++checks;
    }
    if (e.at("passed") != all) throw std::invalid_argument("report: inconsistent status for " + name);
  }
  const Json& s = need(j, "summary");
  if (need(s, "entries") != entries.size() || need(s, "checks") != checks || need(s, "failed") != failed ||
      need(s, "passed") != (failed == 0))
    throw std::invalid_argument("report: summary does not match entries");
  if (j.contains("config") && !j.at("config").is_object()) throw std::invalid_argument("report: bad config");
}

Report report_from_json(const Json& j) {
  validate_report(j);
  Report r;
  for (const auto& [name, e] : j.at("entries").items()) {
    EntryResult er;
    er.entry = name;
    er.kind = e.at("kind").get<std::string>();
    for (const auto& c : e.at("checks"))
      er.checks.push_back({c.at("name").get<std::string>(), c.at("case").get<std::string>(), c.at("status") == "pass",
                           c.at("detail").get<std::string>(), c.at("payload")});
    r.entries[name] = std::move(er);
  }
  if (j.contains("config")) {
    const Json& c = j.at("config");
    RunConfig rc;
    rc.entries = c.at("entries").get<std::vector<std::string>>();
    rc.samples = c.at("samples").get<std::size_t>();
    rc.seed = c.at("seed").get<unsigned long long>();
    if (!c.at("tol").is_null()) rc.tol = c.at("tol").get<double>();
    if (!c.at("lambda").is_null()) rc.lambda = c.at("lambda").get<double>();
    for (const auto& [k, v] : c.at("overrides").items()) rc.overrides[k] = scalar_from_json(v);
    r.config = rc;
  }
  return r;
}

Report merge_reports(const std::vector<Report>& parts, std::vector<std::string>* duplicates) {
  Report out;
  for (const auto& p : parts)
    for (const auto& [name, e] : p.entries) {
      if (out.entries.count(name) && duplicates) duplicates->push_back(name);
      out.entries[name] = e;
    }
  return out;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  for (const auto& [name, e] : r.entries) {
    os << name << "  [" << e.kind << "]  " << (e.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : e.checks)
      os << "  " << (c.passed ? "pass" : "FAIL") << "  " << std::left << std::setw(20) << c.name << std::setw(24)
         << c.label << c.detail << "\n";
  }
  os << r.entries.size() << " entries, " << r.failed_checks() << " failed checks\n";
  return os.str();
}

}  // namespace bicross
