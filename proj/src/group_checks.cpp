#include "bicross/group_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bicross/finite_difference.hpp"

namespace bicross {

namespace {

constexpr std::size_t kMaxAttempts = 1000;

Point axis(std::size_t n, std::size_t k, double v) {
  Point p(n, 0.0);
  p[k] = v;
  return p;
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

void ResidualReport::record(const std::string& name, double value) {
  double& slot = max_residual[name];
  if (!(value <= slot)) slot = std::isnan(value) ? INFINITY : value;
}

double ResidualReport::worst() const {
  double w = 0;
  for (const auto& [k, v] : max_residual) w = std::max(w, v);
  return w;
}

bool DomainSampler::inside(const Point& g, const Point& s) const {
  if (!pair.g1.contains(g) || !pair.g2.contains(s)) return false;
  return pair.margin(g, s) >= cfg.min_margin;
}

std::pair<Point, Point> DomainSampler::draw() {
  for (std::size_t k = 0; k < kMaxAttempts; ++k) {
    Point g = pair.g1.sample(rng, cfg), s = pair.g2.sample(rng, cfg);
    if (inside(g, s)) return {g, s};
  }
  throw std::runtime_error("sampler found no in-domain point for " + pair.full_name());
}

ResidualReport check_group_matched_pair(const GroupMatchedPair& p, const SampleConfig& cfg) {
  ResidualReport r;
  r.tol = cfg.tol;
  DomainSampler ds(p, cfg);
  const ChartGroup &g1 = p.g1, &g2 = p.g2, &G = p.g;
  for (std::size_t n = 0; n < cfg.count; ++n) {
    Point g, s, h, t;
    bool found = false;
    for (std::size_t k = 0; k < kMaxAttempts && !found; ++k) {
      std::tie(g, s) = ds.draw();
      std::tie(h, t) = ds.draw();
      Point as = p.alpha(g, s), bg = p.beta(s, g);
      found = ds.inside(h, as) && ds.inside(g1.multiply(h, g), s) && ds.inside(bg, t) &&
              ds.inside(g, g2.multiply(t, s));
    }
    if (!found) throw std::runtime_error("sampler found no admissible quadruple for " + p.full_name());
    Point as = p.alpha(g, s), bs = p.beta(s, g);
    Point hg = g1.multiply(h, g), ts = g2.multiply(t, s);

    r.record("alpha_product", g2.distance(p.alpha(hg, s), p.alpha(h, as)));
    r.record("beta_product", g1.distance(p.beta(s, hg), g1.multiply(p.beta(as, h), bs)));
    r.record("beta_composition", g1.distance(p.beta(ts, g), p.beta(t, bs)));
    r.record("alpha_composition", g2.distance(p.alpha(g, ts), g2.multiply(p.alpha(bs, t), as)));
    r.record("factorization",
             G.distance(G.multiply(p.embed2(as), p.embed1(bs)), G.multiply(p.embed1(g), p.embed2(s))));
    double unit = std::max({g2.distance(p.alpha(g, g2.identity), g2.identity), g2.distance(p.alpha(g1.identity, s), s),
                            g1.distance(p.beta(s, g1.identity), g1.identity), g1.distance(p.beta(g2.identity, g), g)});
    r.record("units", unit);
    double emb = std::max(G.distance(p.embed1(hg), G.multiply(p.embed1(h), p.embed1(g))),
                          G.distance(p.embed2(ts), G.multiply(p.embed2(s), p.embed2(t))));
    r.record("embeddings", emb);
    ++r.samples;
  }
  return r;
}

InfinitesimalEstimate infinitesimal_data(const GroupMatchedPair& p, double h) {
  if (h < 1e-6 || h > 1e-3) throw std::invalid_argument("infinitesimal_data: step must lie in [1e-6, 1e-3]");
  const ChartGroup &g1 = p.g1, &g2 = p.g2;
  std::size_t n = g1.dim;
  InfinitesimalEstimate est;
  est.n = n;
  est.constants.assign(n * n * n, 0.0);
  est.chi.assign(n, 0.0);
  est.beta.assign(n * n, 0.0);
  auto at = [&](std::size_t i, double u) { return g1.from_local(axis(n, i, u)); };
  auto s_at = [&](double t) { return g2.from_local({t}); };
  for (std::size_t i = 0; i < n; ++i) {
    Estimate c = mixed_derivative([&](double u, double t) { return g2.to_local(p.alpha(at(i, u), s_at(t))); }, h);
    est.chi[i] = c.value[0];
    Estimate b = mixed_derivative([&](double t, double u) { return g1.to_local(p.beta(s_at(t), at(i, u))); }, h);
    for (std::size_t k = 0; k < n; ++k) est.beta[k * n + i] = b.value[k];
    est.error = std::max({est.error, c.error, b.error});
    for (std::size_t j = i + 1; j < n; ++j) {
      Estimate br = mixed_derivative(
          [&](double u, double v) {
            Point x = at(i, u), y = at(j, v);
            Point comm = g1.multiply(g1.multiply(g1.multiply(x, y), g1.inverse(x)), g1.inverse(y));
            return g1.to_local(comm);
          },
          h);
      for (std::size_t k = 0; k < n; ++k) {
        est.constants[(i * n + j) * n + k] = br.value[k];
        est.constants[(j * n + i) * n + k] = -br.value[k];
      }
      est.error = std::max(est.error, br.error);
    }
  }
  return est;
}

MatchReport match_to_catalog(const InfinitesimalEstimate& est, const AlgebraMatch& match, double tol) {
  NPlus1Data b = image_data(match.source, match.t, match.s);
  std::size_t n = b.g1.dim();
  if (n != est.n) throw std::invalid_argument("match_to_catalog: dimension mismatch");
  MatchReport r;
  r.label = match.label;
  r.error = est.error;
  r.tol = tol;
  for (std::size_t i = 0; i < n; ++i) {
    r.deviation = std::max(r.deviation, std::abs(est.chi[i] - to_double(b.chi[i])));
    for (std::size_t k = 0; k < n; ++k) r.deviation = std::max(r.deviation, std::abs(est.beta[k * n + i] - to_double(b.beta(k, i))));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        r.deviation =
            std::max(r.deviation, std::abs(est.constants[(i * n + j) * n + k] - to_double(b.g1.constant(i, j, k))));
  }
  return r;
}

double modular_function(const ChartGroup& g, const Point& p) {
  if (!g.contains(p)) throw std::domain_error("modular_function: point outside " + g.name);
  return g.modular(p);
}

KacReport kac_criterion(const GroupMatchedPair& p, const SampleConfig& cfg) {
  KacReport r;
  DomainSampler ds(p, cfg);
  const ChartGroup &G = p.g, &g1 = p.g1, &g2 = p.g2;
  const std::size_t oracle_samples = std::min<std::size_t>(cfg.count, 50);
  for (std::size_t n = 0; n < cfg.count; ++n) {
    auto [g, s] = ds.draw();
    Point a = p.alpha(g, s), b = p.beta(s, g);
    double lhs1 = G.modular(p.embed1(g1.multiply(g, g1.inverse(b)))) * g1.modular(g1.multiply(g1.inverse(g), b)) *
                  g2.modular(g2.multiply(a, g2.inverse(s)));
    r.eq1_deviation = std::max(r.eq1_deviation, std::abs(lhs1 - 1));
    double lhs2 = g1.modular(b) / g1.modular(g), rhs2 = g2.modular(a) / g2.modular(s);
    r.eq2_deviation = std::max(r.eq2_deviation, std::abs(lhs2 / rhs2 - 1));

    double dm = g2.modular(a) / G.modular(p.embed2(a));
    r.delta_m_unit_deviation = std::max(r.delta_m_unit_deviation, std::abs(dm - 1));
    if (p.delta_m) r.delta_m_residual = std::max(r.delta_m_residual.value_or(0), rel_gap(dm, p.delta_m(g, s)));
    if (p.delta_m_hat) {
      double dmh = G.modular(p.embed1(b)) / (g1.modular(b) * g1.modular(b));
      r.delta_m_hat_residual = std::max(r.delta_m_hat_residual.value_or(0), rel_gap(dmh, p.delta_m_hat(g, s)));
    }
    if (n < oracle_samples) {
      Point x = G.multiply(p.embed1(g), p.embed2(s));
      double worst = std::max({rel_gap(G.modular(x), modular_oracle(G, x)), rel_gap(g1.modular(g), modular_oracle(g1, g)),
                               rel_gap(g2.modular(s), modular_oracle(g2, s))});
      r.modular_oracle_residual = std::max(r.modular_oracle_residual, worst);
    }
    ++r.samples;
  }
  r.eq1 = r.eq1_deviation <= cfg.tol;
  r.eq2 = r.eq2_deviation <= cfg.tol;
  return r;
}

namespace {

// |det d(coords f)/d(coords)| at x for a self-map f of the group.
double jacobian_det(const ChartGroup& g, const std::function<Point(const Point&)>& f, const Point& x, double h) {
  std::size_t n = g.dim;
  Point c0 = g.coords(x);
  Point base = g.coords(f(x));
  std::vector<double> j(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    Estimate e = derivative(
        [&](double t) {
          Point c = c0;
          c[k] += t;
          return coordinate_difference(g, g.coords(f(g.from_coords(c))), base);
        },
        h);
    for (std::size_t r = 0; r < n; ++r) j[r * n + k] = e.value[r];
  }
  return std::abs(dense_determinant(j, n));
}

}  // namespace

bool preserves_modular_and_haar(const GroupMatchedPair& p, const SampleConfig& cfg) {
  DomainSampler ds(p, cfg);
  const double tol = 1e-6, h = 1e-4;
  for (std::size_t n = 0; n < cfg.count; ++n) {
    auto [g, s] = ds.draw();
    Point a = p.alpha(g, s), b = p.beta(s, g);
    if (rel_gap(p.g1.modular(b), p.g1.modular(g)) > tol) return false;
    if (rel_gap(p.g2.modular(a), p.g2.modular(s)) > tol) return false;
    double jb = jacobian_det(p.g1, [&](const Point& x) { return p.beta(s, x); }, g, h);
    if (rel_gap(jb * left_haar_density(p.g1, b), left_haar_density(p.g1, g)) > tol) return false;
    double ja = jacobian_det(p.g2, [&](const Point& y) { return p.alpha(g, y); }, s, h);
    if (rel_gap(ja * left_haar_density(p.g2, a), left_haar_density(p.g2, s)) > tol) return false;
  }
  return true;
}

}  // namespace bicross
