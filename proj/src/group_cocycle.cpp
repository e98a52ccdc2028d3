#include "bicross/group_cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bicross/catalog.hpp"
#include "bicross/finite_difference.hpp"

namespace bicross {

namespace {

constexpr std::size_t kMaxAttempts = 1000;

using Factor = std::function<double(double)>;

Factor affine(double c0, double c1) {
  return [c0, c1](double r) { return c0 + c1 * r; };
}

double wedge(const Point& g, const Point& h) { return g[0] * h[1] - g[1] * h[0]; }

// Integral of e^{tau r} over [0, s].
double exp_integral(double tau, double s) { return tau == 0 ? s : std::expm1(tau * s) / tau; }

CocycleSpec linear_split_spec(double tau) {
  CocycleSpec c;
  c.generator = wedge;
  c.closed_form = [tau](const Point& g, const Point& h, const Point& s) { return wedge(g, h) * exp_integral(tau, s[0]); };
  return c;
}

// f(a,x;b,y) = a b x log|b| on (a,x)(b,y) = (ab, x + y/a).
double affine_log_generator(const Point& g, const Point& h) { return g[0] * h[0] * g[1] * std::log(std::abs(h[0])); }

CocycleSpec recipe(const GroupMatchedPair& pair) {
  const std::string& base = pair.name;
  const Params& p = pair.params;
  CocycleSpec c;
  if (base == "group/split-1.1" || base == "group/split-2.3") {
    c = linear_split_spec(0);
  } else if (base == "group/split-2.1") {
    c = linear_split_spec(1 + to_double(p.at("r")));
  } else if (base == "group/split-3" && p.at("a") == -1) {
    // (u, y) stands for (e^u, y).
    c.generator = [](const Point& g, const Point& h) { return std::exp(g[0] + h[0]) * g[1] * h[0]; };
    c.closed_form = [](const Point& g, const Point& h, const Point& s) {
      return s[0] * std::exp(g[0] + h[0]) * g[1] * h[0];
    };
  } else if (base == "group/4.2" && p.at("d") == -1) {
    c.generator = affine_log_generator;
    c.closed_form = [](const Point& g, const Point& h, const Point& s) {
      double a = g[0], x = g[1], b = h[0], t = s[0];
      double u = (a - 1 / a) / 2;
      return a * b * std::log(b) * (x * t + u * b * t * t / 2);
    };
  } else if (base == "group/4.1" && p.at("d") == -1 && p.at("b") == 0) {
    c.generator = affine_log_generator;
    c.closed_form = [](const Point& g, const Point& h, const Point& s) {
      double a = g[0], x = g[1], b = h[0], t = s[0];
      double m = b * (t - 1) + 1;
      return a * x * (-m * std::log(std::abs(m)) + b * t * std::log(std::abs(b * t)) - b * std::log(std::abs(b)));
    };
    c.factors = [](const Point&, const Point& h) { return std::vector<Factor>{affine(1 - h[0], h[0])}; };
    c.log_measure = true;
    c.base = 1;
  } else if (base == "group/4.3=0") {
    c.generator = [](const Point& g, const Point& h) { return g[1] * std::log(h[0]) / (g[0] * h[0] * h[0]); };
    c.flow_integrand = [](const Point& g, const Point& h, double r) {
      double a = g[0], x = g[1], b = h[0], y = h[1];
      return x / ((b + r * y) * (a * b + r * (a * y + x / b))) * std::log(std::abs(b + y * r));
    };
    c.factors = [](const Point& g, const Point& h) {
      double a = g[0], x = g[1], b = h[0], y = h[1];
      return std::vector<Factor>{affine(b, y), affine(a * b, a * y + x / b)};
    };
  } else if (base == "group/4.3+") {
    c.generator = [](const Point& g, const Point& h) { return h[1] / h[0] * std::log(std::abs(g[0])); };
    c.flow_integrand = [](const Point& g, const Point& h, double r) {
      double a = g[0], x = g[1], b = h[0], y = h[1];
      double num = ((x + a * y + 1) * r + a * b - x - a * y - 1) * ((x + a * y) * r + a * b - x - a * y);
      double den = a * ((y + 1) * r + b - y - 1) * (y * r + b - y);
      return y / (y * r + b - y) * std::log(std::abs(num / den));
    };
    c.factors = [](const Point& g, const Point& h) {
      double a = g[0], x = g[1], b = h[0], y = h[1];
      double w = x + a * y;
      return std::vector<Factor>{affine(b - y - 1, y + 1), affine(b - y, y), affine(a * b - w - 1, w + 1),
                                 affine(a * b - w, w)};
    };
    c.log_measure = true;
    c.base = 1;
  } else if (base == "group/4.3-") {
    c.generator = [](const Point& g, const Point& h) { return h[1] / h[0] * std::log(g[0]); };
  } else {
    throw std::invalid_argument("no cocycle recipe for " + pair.full_name());
  }
  return c;
}

double relative_gap(double lhs, double rhs, std::initializer_list<double> terms) {
  double scale = 1;
  for (double t : terms) scale = std::max(scale, std::abs(t));
  return std::abs(lhs - rhs) / scale;
}

}  // namespace

std::string mode_name(CocycleMode m) { return m == CocycleMode::Closed ? "closed" : "pv"; }

CocycleMode parse_mode(const std::string& s) {
  if (s == "closed") return CocycleMode::Closed;
  if (s == "pv") return CocycleMode::Pv;
  throw std::invalid_argument("unknown cocycle mode: " + s);
}

AngleResidual AngleResidual::of(double raw) {
  double v = std::remainder(raw, 2 * M_PI);
  if (v <= -M_PI) v += 2 * M_PI;
  return {v};
}

std::vector<std::string> cocycle_entries() {
  return {"group/split-1.1", "group/split-2.1?r=1/2", "group/split-2.3", "group/split-3?a=-1", "group/4.1?b=0&d=-1",
          "group/4.2?d=-1",  "group/4.3+",            "group/4.3-",      "group/4.3=0"};
}

CocycleSpec cocycle_spec(const std::string& entry, double lambda, CocycleMode mode) {
  GroupMatchedPair pair = group_pair(entry);
  CocycleSpec c = recipe(pair);
  c.entry = pair.full_name();
  c.lambda = lambda;
  c.mode = mode;
  if (mode == CocycleMode::Closed && !c.closed_form)
    throw std::invalid_argument("no closed form for " + c.entry + "; use pv mode");
  return c;
}

std::optional<std::string> cocycle_entry_for_algebra(const std::string& algebra_entry) {
  std::string g = catalog_entry(algebra_entry).group_entry;
  if (g.empty()) return std::nullopt;
  try {
    recipe(group_pair(g));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return g;
}

double composed_integrand(const CocycleSpec& spec, const GroupMatchedPair& pair, const Point& g, const Point& h,
                          double r) {
  Point z = pair.g2.from_coords({r});
  Point g_r = pair.beta(pair.alpha(h, z), g);
  Point h_r = pair.beta(z, h);
  double v = spec.generator(g_r, h_r);
  return spec.log_measure ? v / r : v;
}

std::vector<double> singular_points(const CocycleSpec& spec, const Point& g, const Point& h, double r_end) {
  double lo = std::min(spec.base, r_end), hi = std::max(spec.base, r_end);
  std::vector<double> pts;
  if (spec.factors) pts = bracket_roots(spec.factors(g, h), lo, hi);
  if (spec.log_measure && lo < 0 && hi > 0) pts.push_back(0);
  std::sort(pts.begin(), pts.end());
  return pts;
}

double cocycle_value(const CocycleSpec& spec, const GroupMatchedPair& pair, const Point& g, const Point& h,
                     const Point& s) {
  double r_end = pair.g2.coords(s)[0];
  if (spec.lambda == 0 || r_end == spec.base) return 0;
  if (spec.mode == CocycleMode::Closed) return spec.lambda * spec.closed_form(g, h, s);
  std::function<double(double)> integrand;
  if (spec.flow_integrand)
    integrand = [&](double r) { return spec.flow_integrand(g, h, r); };
  else
    integrand = [&](double r) { return composed_integrand(spec, pair, g, h, r); };
  return spec.lambda * pv_integral(integrand, spec.base, r_end, singular_points(spec, g, h, r_end)).value;
}

GeneratorReport infinitesimal_generator_check(const GroupMatchedPair& pair, const PairFunction& f,
                                              const SampleConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const ChartGroup &g1 = pair.g1, &g2 = pair.g2;
  GeneratorReport r;
  for (std::size_t n = 0; n < cfg.count; ++n) {
    Point g = g1.sample(rng, cfg), h = g1.sample(rng, cfg), k = g1.sample(rng, cfg);
    double chi =
        derivative([&](double t) { return g2.to_local(pair.alpha(k, g2.from_local({t}))); }, 1e-3).value[0];
    double t1 = chi * f(g, h), t2 = f(g1.multiply(g, h), k), t3 = f(h, k), t4 = f(g, g1.multiply(h, k));
    r.max_residual = std::max(r.max_residual, relative_gap(t1 + t2, t3 + t4, {t1, t2, t3, t4}));
    ++r.samples;
  }
  return r;
}

double CocycleReport::max_residual() const { return std::max({product_residual, flow_residual, base_residual}); }

double default_cocycle_tol(CocycleMode m) { return m == CocycleMode::Closed ? 1e-9 : 1e-5; }

CocycleReport check_group_cocycle(const CocycleSpec& spec, const GroupMatchedPair& pair, const SampleConfig& cfg,
                                  std::optional<double> tol) {
  if (spec.entry != pair.full_name()) throw std::invalid_argument("cocycle spec and group pair disagree");
  CocycleReport rep;
  rep.entry = spec.entry;
  rep.lambda = spec.lambda;
  rep.mode = spec.mode;
  rep.tol = tol.value_or(default_cocycle_tol(spec.mode));
  const ChartGroup &g1 = pair.g1, &g2 = pair.g2;
  DomainSampler ds(pair, cfg);
  // A(g, h, s) needs alpha_h(s) and beta of g by it away from the singular set.
  auto ok = [&](const Point& g, const Point& h, const Point& s) {
    return ds.inside(h, s) && ds.inside(g, pair.alpha(h, s));
  };
  auto A = [&](const Point& g, const Point& h, const Point& s) { return cocycle_value(spec, pair, g, h, s); };

  for (std::size_t n = 0; n < cfg.count; ++n) {
    Point g, h, k, s, t, unused;
    bool found = false;
    for (std::size_t a = 0; a < kMaxAttempts && !found; ++a) {
      std::tie(g, s) = ds.draw();
      std::tie(h, t) = ds.draw();
      std::tie(k, unused) = ds.draw();
      if (!ds.inside(k, s)) continue;
      Point ks = pair.alpha(k, s);
      if (!(ok(g, h, ks) && ok(g1.multiply(g, h), k, s) && ok(h, k, s) && ok(g, g1.multiply(h, k), s))) continue;
      if (!ok(g, h, s)) continue;
      Point gs = pair.beta(pair.alpha(h, s), g), hs = pair.beta(s, h);
      found = ok(gs, hs, t) && ok(g, h, g2.multiply(t, s));
    }
    if (!found) throw std::runtime_error("no admissible cocycle sample for " + spec.entry);
    try {
      Point ks = pair.alpha(k, s);
      double lhs1 = A(g, h, ks) + A(g1.multiply(g, h), k, s);
      double rhs1 = A(h, k, s) + A(g, g1.multiply(h, k), s);
      Point gs = pair.beta(pair.alpha(h, s), g), hs = pair.beta(s, h);
      double lhs2 = A(g, h, s) + A(gs, hs, t);
      double rhs2 = A(g, h, g2.multiply(t, s));
      double at_base = A(g, h, g2.identity);
      if (spec.mode == CocycleMode::Closed) at_base = spec.lambda * spec.closed_form(g, h, g2.identity);
      rep.product_residual = std::max(rep.product_residual, std::abs(AngleResidual::of(lhs1 - rhs1).value));
      rep.flow_residual = std::max(rep.flow_residual, std::abs(AngleResidual::of(lhs2 - rhs2).value));
      rep.base_residual = std::max(rep.base_residual, std::abs(AngleResidual::of(at_base).value));
      ++rep.samples;
    } catch (const PvDivergence&) {
      ++rep.skipped;
    } catch (const std::domain_error&) {
      ++rep.skipped;
    }
  }
  return rep;
}

std::vector<double> quantization_scan(const std::string& entry, CocycleMode mode, const std::vector<double>& grid,
                                      const SampleConfig& cfg) {
  GroupMatchedPair pair = group_pair(entry);
  std::vector<double> passing;
  for (double lambda : grid)
    if (check_group_cocycle(cocycle_spec(entry, lambda, mode), pair, cfg).passed()) passing.push_back(lambda);
  return passing;
}

double torus_potential(double a, double x) { return -4 * M_PI * std::atan(x / (1 + a)); }

TorusObstruction torus_obstruction(double a, double x, double b, double y, double lambda) {
  if (!(a > 0 && b > 0)) throw std::domain_error("torus_obstruction: a and b must be positive");
  static const GroupMatchedPair pair = group_pair("group/4.3-");
  CocycleSpec spec = cocycle_spec("group/4.3-", 1);
  Point g{a, x}, h{b, y};
  TorusObstruction t;
  t.quadrature =
      lambda * regular_integral([&](double th) { return composed_integrand(spec, pair, g, h, th); }, 0, 2 * M_PI).value;
  t.closed_form = lambda * (torus_potential(a, x) + torus_potential(b, y) - torus_potential(a * b, x + a * y));
  t.difference = std::abs(t.quadrature - t.closed_form);
  return t;
}

double torus_witness(double lambda, const SampleConfig& cfg) {
  static const GroupMatchedPair pair = group_pair("group/4.3-");
  std::mt19937_64 rng(cfg.seed);
  double best = 0;
  for (std::size_t n = 0; n < cfg.count; ++n) {
    Point g = pair.g1.sample(rng, cfg), h = pair.g1.sample(rng, cfg);
    double v = torus_obstruction(g[0], g[1], h[0], h[1], lambda).quadrature;
    best = std::max(best, std::abs(AngleResidual::of(v).value));
  }
  return best;
}

}  // namespace bicross
