#include "bicross/chart_group.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bicross/finite_difference.hpp"

namespace bicross {

namespace {

Point axis(std::size_t n, std::size_t k, double v) {
  Point p(n, 0.0);
  p[k] = v;
  return p;
}

// Jacobian of F at 0, column k = dF/du_k, via central differences.
std::vector<double> jacobian_at_zero(const std::function<Point(const Point&)>& f, std::size_t n, double h) {
  std::vector<double> j(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    Estimate e = derivative([&](double t) { return f(axis(n, k, t)); }, h);
    if (e.value.size() != n) throw std::invalid_argument("jacobian: chart dimension mismatch");
    for (std::size_t r = 0; r < n; ++r) j[r * n + k] = e.value[r];
  }
  return j;
}

}  // namespace

Point ChartGroup::sample(std::mt19937_64& rng, const SampleConfig& cfg) const {
  if (sampler) return sampler(rng, cfg);
  Point p(kinds.size());
  std::uniform_real_distribution<double> u(-cfg.log_spread, cfg.log_spread);
  std::normal_distribution<double> nrm(0.0, cfg.sigma);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    switch (kinds[i]) {
      case Coord::Additive: p[i] = nrm(rng); break;
      case Coord::Positive: p[i] = std::exp(u(rng)); break;
      case Coord::Multiplicative: {
        double m = std::exp(u(rng));
        p[i] = coin(rng) ? m : -m;
        break;
      }
    }
  }
  return p;
}

Point coordinate_difference(const ChartGroup& g, const Point& c, const Point& base) {
  Point d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    d[i] = c[i] - base[i];
    if (g.periodic) d[i] = std::remainder(d[i], 2 * M_PI);
  }
  return d;
}

double relative_distance(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw std::invalid_argument("relative_distance: size mismatch");
  double r = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    r = std::max(r, std::abs(x[i] - y[i]) / (1 + std::max(std::abs(x[i]), std::abs(y[i]))));
  return r;
}

ChartGroup coordinate_group(std::string name, std::vector<Coord> kinds, Point identity,
                            std::function<Point(const Point&, const Point&)> multiply,
                            std::function<Point(const Point&)> inverse, std::function<double(const Point&)> modular) {
  ChartGroup g;
  g.name = std::move(name);
  g.dim = kinds.size();
  g.identity = identity;
  g.multiply = std::move(multiply);
  g.inverse = std::move(inverse);
  g.modular = std::move(modular);
  g.to_local = [identity](const Point& p) {
    Point r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] - identity[i];
    return r;
  };
  g.from_local = [identity](const Point& u) {
    Point r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + identity[i];
    return r;
  };
  g.distance = relative_distance;
  std::vector<Coord> ks = kinds;
  g.contains = [ks](const Point& p) {
    if (p.size() != ks.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!std::isfinite(p[i])) return false;
      if (ks[i] == Coord::Multiplicative && p[i] == 0) return false;
      if (ks[i] == Coord::Positive && p[i] <= 0) return false;
    }
    return true;
  };
  g.coords = [](const Point& p) { return p; };
  g.from_coords = [](const Point& p) { return p; };
  g.kinds = std::move(kinds);
  return g;
}

ChartGroup circle_group(std::string name) {
  ChartGroup g;
  g.name = std::move(name);
  g.dim = 1;
  g.identity = {1.0, 0.0};
  g.multiply = [](const Point& a, const Point& b) {
    return Point{a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
  };
  g.inverse = [](const Point& a) { return Point{a[0], -a[1]}; };
  g.to_local = [](const Point& a) { return Point{std::atan2(a[1], a[0])}; };
  g.from_local = [](const Point& t) { return Point{std::cos(t[0]), std::sin(t[0])}; };
  g.modular = [](const Point&) { return 1.0; };
  g.contains = [](const Point& a) { return a.size() == 2 && std::abs(std::hypot(a[0], a[1]) - 1) < 1e-9; };
  g.distance = [](const Point& a, const Point& b) { return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1])); };
  g.coords = g.to_local;
  g.from_coords = g.from_local;
  g.periodic = true;
  g.sampler = [](std::mt19937_64& rng, const SampleConfig&) {
    std::uniform_real_distribution<double> t(-M_PI, M_PI);
    double a = t(rng);
    return Point{std::cos(a), std::sin(a)};
  };
  return g;
}

Point matmul2(const Point& a, const Point& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

ChartGroup projective_matrix_group(std::string name) {
  ChartGroup g;
  g.name = std::move(name);
  g.dim = 3;
  g.identity = {1, 0, 0, 1};
  g.multiply = matmul2;
  g.inverse = [](const Point& a) {
    double det = a[0] * a[3] - a[1] * a[2];
    return Point{a[3] / det, -a[1] / det, -a[2] / det, a[0] / det};
  };
  g.to_local = [](const Point& a) {
    double s = a[0] < 0 ? -1.0 : 1.0;
    return Point{s * a[0] - 1, s * a[1], s * a[2]};
  };
  g.from_local = [](const Point& u) { return Point{1 + u[0], u[1], u[2], (1 + u[1] * u[2]) / (1 + u[0])}; };
  g.modular = [](const Point&) { return 1.0; };
  g.contains = [](const Point& a) {
    return a.size() == 4 && std::abs(std::abs(a[0] * a[3] - a[1] * a[2]) - 1) < 1e-9;
  };
  g.distance = [](const Point& a, const Point& b) {
    Point nb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
    return std::min(relative_distance(a, b), relative_distance(a, nb));
  };
  return g;
}

double modular_oracle(const ChartGroup& g, const Point& p, double h) {
  Point pinv = g.inverse(p);
  auto conj = [&](const Point& u) { return g.to_local(g.multiply(g.multiply(p, g.from_local(u)), pinv)); };
  return 1.0 / std::abs(dense_determinant(jacobian_at_zero(conj, g.dim, h), g.dim));
}

double left_haar_density(const ChartGroup& g, const Point& p, double h) {
  if (!g.coords) throw std::invalid_argument("left_haar_density: group has no global coordinates");
  Point base = g.coords(p);
  auto shifted = [&](const Point& u) {
    return coordinate_difference(g, g.coords(g.multiply(p, g.from_local(u))), base);
  };
  return 1.0 / std::abs(dense_determinant(jacobian_at_zero(shifted, g.dim, h), g.dim));
}

AxiomResiduals group_axiom_residuals(const ChartGroup& g, const SampleConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  AxiomResiduals r;
  for (std::size_t k = 0; k < cfg.count; ++k) {
    Point a = g.sample(rng, cfg), b = g.sample(rng, cfg), c = g.sample(rng, cfg);
    r.associativity = std::max(
        r.associativity, g.distance(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c))));
    r.inverse = std::max(r.inverse, g.distance(g.multiply(a, g.inverse(a)), g.identity));
    r.inverse = std::max(r.inverse, g.distance(g.multiply(g.inverse(a), a), g.identity));
    r.unit = std::max(r.unit, g.distance(g.multiply(a, g.identity), a));
    r.unit = std::max(r.unit, g.distance(g.multiply(g.identity, a), a));
  }
  return r;
}

double dense_determinant(std::vector<double> m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("dense_determinant: size mismatch");
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
    if (m[piv * n + c] == 0) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[c * n + k], m[piv * n + k]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = m[r * n + c] / m[c * n + c];
      for (std::size_t k = c; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
    }
  }
  return det;
}

}  // namespace bicross
