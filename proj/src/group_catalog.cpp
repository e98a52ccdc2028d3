#include "bicross/group_catalog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bicross/catalog.hpp"

namespace bicross {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sgn(double v) { return v < 0 ? -1.0 : 1.0; }

Matrix cols2(Vector x, Vector y) { return Matrix::from_columns(2, {std::move(x), std::move(y)}); }

ChartGroup line_group(const std::string& name) {
  return coordinate_group(
      name, {Coord::Additive}, {0.0}, [](const Point& a, const Point& b) { return Point{a[0] + b[0]}; },
      [](const Point& a) { return Point{-a[0]}; }, [](const Point&) { return 1.0; });
}

ChartGroup multiplicative_group(const std::string& name) {
  return coordinate_group(
      name, {Coord::Multiplicative}, {1.0}, [](const Point& a, const Point& b) { return Point{a[0] * b[0]}; },
      [](const Point& a) { return Point{1 / a[0]}; }, [](const Point&) { return 1.0; });
}

// (a, x)(b, y) = (ab, x + a^d y); delta_1 = |a|^-d.
ChartGroup power_affine_group(const std::string& name, double d, Coord first) {
  return coordinate_group(
      name, {first, Coord::Additive}, {1.0, 0.0},
      [d](const Point& p, const Point& q) { return Point{p[0] * q[0], p[1] + signed_power(p[0], d) * q[1]}; },
      [d](const Point& p) { return Point{1 / p[0], -p[1] / signed_power(p[0], d)}; },
      [d](const Point& p) { return std::pow(std::abs(p[0]), -d); });
}

NPlus1Data rotation_case(const Scalar& a) {
  NPlus1Data d;
  d.g1 = LieAlgebra::from_brackets({"X", "Y"}, {{"X", "Y", {{"Y", -1}}}});
  d.chi = {1, 0};
  d.beta = cols2({0, a}, {1, 0});
  return d;
}

AlgebraMatch catalog_match(const std::string& name, Matrix t, Scalar s) {
  return {"catalog", name, catalog_entry(name).data, std::move(t), std::move(s)};
}

// G is sampled through its dense open cell i(G1) j(G2).
void finish(GroupMatchedPair& p) {
  ChartGroup g1 = p.g1, g2 = p.g2;
  auto i = p.embed1, j = p.embed2;
  auto mul = p.g.multiply;
  p.g.sampler = [g1, g2, i, j, mul](std::mt19937_64& rng, const SampleConfig& cfg) {
    Point a = g1.sample(rng, cfg);
    Point s = g2.sample(rng, cfg);
    return mul(i(a), j(s));
  };
}

GroupMatchedPair one_plus_one() {
  GroupMatchedPair p;
  p.summary = "G = R* x R, (s,x)(t,y) = (st, x+sy); i(g) = (g,0), j(s) = (s,s-1)";
  p.g = coordinate_group(
      "G", {Coord::Multiplicative, Coord::Additive}, {1.0, 0.0},
      [](const Point& a, const Point& b) { return Point{a[0] * b[0], a[1] + a[0] * b[1]}; },
      [](const Point& a) { return Point{1 / a[0], -a[1] / a[0]}; }, [](const Point& a) { return 1 / std::abs(a[0]); });
  p.g1 = multiplicative_group("G1");
  p.g2 = multiplicative_group("G2");
  p.embed1 = [](const Point& g) { return Point{g[0], 0.0}; };
  p.embed2 = [](const Point& s) { return Point{s[0], s[0] - 1}; };
  p.alpha = [](const Point& g, const Point& s) { return Point{g[0] * (s[0] - 1) + 1}; };
  p.beta = [](const Point& s, const Point& g) { return Point{s[0] * g[0] / (g[0] * (s[0] - 1) + 1)}; };
  p.margin = [](const Point& g, const Point& s) { return std::abs(g[0] * (s[0] - 1) + 1); };
  p.matches = {catalog_match("1+1/4", Matrix::identity(1), -1)};
  p.kac_expected = false;
  return p;
}

GroupMatchedPair power_extension(const Scalar& n_exact) {
  if (n_exact == 0 || n_exact.get_den() != 1) throw std::invalid_argument("ex3.5 requires a nonzero integer n");
  int n = static_cast<int>(n_exact.get_num().get_si());
  GroupMatchedPair p;
  p.summary = "G1 = {(a,u)}, (a,u)(a',u') = (aa', u+a^n u'); j(v) = (v,0,v-1)";
  p.g = coordinate_group(
      "G", {Coord::Multiplicative, Coord::Additive, Coord::Additive}, {1.0, 0.0, 0.0},
      [n](const Point& a, const Point& b) {
        return Point{a[0] * b[0], a[1] + std::pow(a[0], n) * b[1], a[2] + a[0] * b[2]};
      },
      [n](const Point& a) { return Point{1 / a[0], -a[1] / std::pow(a[0], n), -a[2] / a[0]}; },
      [n](const Point& a) { return std::pow(std::abs(a[0]), -n - 1.0); });
  p.g1 = coordinate_group(
      "G1", {Coord::Multiplicative, Coord::Additive}, {1.0, 0.0},
      [n](const Point& a, const Point& b) { return Point{a[0] * b[0], a[1] + std::pow(a[0], n) * b[1]}; },
      [n](const Point& a) { return Point{1 / a[0], -a[1] / std::pow(a[0], n)}; },
      [n](const Point& a) { return std::pow(std::abs(a[0]), -static_cast<double>(n)); });
  p.g2 = multiplicative_group("G2");
  p.embed1 = [](const Point& g) { return Point{g[0], g[1], 0.0}; };
  p.embed2 = [](const Point& v) { return Point{v[0], 0.0, v[0] - 1}; };
  p.alpha = [](const Point& g, const Point& v) { return Point{g[0] * (v[0] - 1) + 1}; };
  p.beta = [n](const Point& v, const Point& g) {
    double den = g[0] * (v[0] - 1) + 1;
    return Point{v[0] * g[0] / den, g[1] / std::pow(den, n)};
  };
  p.margin = [](const Point& g, const Point& v) { return std::abs(g[0] * (v[0] - 1) + 1); };
  p.matches = {catalog_match(format_entry_name("2+1/4.1", {{"b", 0}, {"d", n_exact}}), Matrix::identity(2), -1)};
  return p;
}

GroupMatchedPair case41(const Scalar& d_exact, const Scalar& b_exact) {
  if (d_exact != 1 && b_exact != 0) throw std::invalid_argument("case 4.1 requires b=0 unless d=1");
  double d = to_double(d_exact), b = to_double(b_exact);
  GroupMatchedPair p;
  p.summary = "G = R* x R^2, (s,x,y)(s',x',y') = (ss', x+sx', y + b u_d(s) x' + s^d y')";
  p.g = coordinate_group(
      "G", {Coord::Multiplicative, Coord::Additive, Coord::Additive}, {1.0, 0.0, 0.0},
      [d, b](const Point& a, const Point& c) {
        return Point{a[0] * c[0], a[1] + a[0] * c[1], a[2] + b * twist_term(a[0], d) * c[1] + signed_power(a[0], d) * c[2]};
      },
      [d, b](const Point& a) {
        double xi = -a[1] / a[0];
        return Point{1 / a[0], xi, -(a[2] + b * twist_term(a[0], d) * xi) / signed_power(a[0], d)};
      },
      [d](const Point& a) { return std::pow(std::abs(a[0]), -d - 1); });
  p.g1 = power_affine_group("G1", d, Coord::Multiplicative);
  p.g2 = multiplicative_group("G2");
  p.embed1 = [d, b](const Point& g) { return Point{g[0], g[0] - 1, g[1] + b * twist_term(g[0], d)}; };
  p.embed2 = [](const Point& s) { return Point{s[0], 0.0, 0.0}; };
  p.alpha = [](const Point& g, const Point& s) { return Point{g[0] * (s[0] - 1) + 1}; };
  p.beta = [d, b](const Point& s, const Point& g) {
    double a = g[0], x = g[1], al = a * (s[0] - 1) + 1;
    double num = x + b * (twist_term(a, d) + twist_term(al, d) - twist_term(a * s[0], d));
    return Point{s[0] * a / al, num / signed_power(al, d)};
  };
  p.margin = [](const Point& g, const Point& s) { return std::abs(g[0] * (s[0] - 1) + 1); };
  Matrix t = d_exact == 0 ? Matrix::identity(2) : cols2({1, 0}, {0, d_exact});
  p.matches = {catalog_match(format_entry_name("2+1/4.1", {{"b", b_exact}, {"d", d_exact}}), t, -1)};
  p.delta_m = [d](const Point& g, const Point& s) { return std::pow(std::abs(g[0] * (s[0] - 1) + 1), d + 1); };
  p.delta_m_hat = [d](const Point& g, const Point& s) {
    return std::pow(std::abs(g[0] * s[0] / (g[0] * (s[0] - 1) + 1)), d - 1);
  };
  p.kac_expected = false;
  return p;
}

GroupMatchedPair case42(const Scalar& d_exact) {
  double d = to_double(d_exact);
  GroupMatchedPair p;
  p.summary = "G = R+ x R^2 with the case 4.1 law at b=1; i(a,x) = (a,0,x), j(s) = (1,s,0)";
  p.g = coordinate_group(
      "G", {Coord::Positive, Coord::Additive, Coord::Additive}, {1.0, 0.0, 0.0},
      [d](const Point& a, const Point& c) {
        return Point{a[0] * c[0], a[1] + a[0] * c[1], a[2] + twist_term(a[0], d) * c[1] + std::pow(a[0], d) * c[2]};
      },
      [d](const Point& a) {
        double xi = -a[1] / a[0];
        return Point{1 / a[0], xi, -(a[2] + twist_term(a[0], d) * xi) / std::pow(a[0], d)};
      },
      [d](const Point& a) { return std::pow(a[0], -d - 1); });
  p.g1 = power_affine_group("G1", d, Coord::Positive);
  p.g2 = line_group("G2");
  p.embed1 = [](const Point& g) { return Point{g[0], 0.0, g[1]}; };
  p.embed2 = [](const Point& s) { return Point{1.0, s[0], 0.0}; };
  p.alpha = [](const Point& g, const Point& s) { return Point{g[0] * s[0]}; };
  p.beta = [d](const Point& s, const Point& g) { return Point{g[0], g[1] + twist_term(g[0], d) * s[0]}; };
  p.margin = [](const Point&, const Point&) { return kInf; };
  p.matches = {catalog_match(format_entry_name("2+1/4.2", {{"d", d_exact}}), Matrix::identity(2), 1)};
  p.delta_m = [](const Point&, const Point&) { return 1.0; };
  p.delta_m_hat = [d](const Point& g, const Point&) { return std::pow(g[0], d - 1); };
  p.kac_expected = true;
  return p;
}

ChartGroup affine_g1(Coord first) {
  return coordinate_group(
      "G1", {first, Coord::Additive}, {1.0, 0.0},
      [](const Point& p, const Point& q) { return Point{p[0] * q[0], p[1] + p[0] * q[1]}; },
      [](const Point& p) { return Point{1 / p[0], -p[1] / p[0]}; }, [](const Point& p) { return 1 / std::abs(p[0]); });
}

GroupMatchedPair case43_positive() {
  GroupMatchedPair p;
  p.summary = "G = {det = +-1} / {+-1}, G1 = R* x R, G2 = R*";
  p.g = projective_matrix_group("G");
  p.g1 = affine_g1(Coord::Multiplicative);
  p.g2 = multiplicative_group("G2");
  auto sq = [](double v) { return sgn(v) * std::sqrt(std::abs(v)); };
  p.embed1 = [sq](const Point& g) {
    double r = std::sqrt(std::abs(g[0]));
    return Point{1 / r, 0.0, 2 * g[1] / r, sq(g[0])};
  };
  p.embed2 = [sq](const Point& s) {
    double r = std::sqrt(std::abs(s[0]));
    return Point{r, 0.5 * (r - 1 / sq(s[0])), 0.0, 1 / sq(s[0])};
  };
  p.alpha = [](const Point& g, const Point& s) {
    double a = g[0], x = g[1], t = s[0];
    return Point{((x + 1) * t + a - x - 1) / (x * t + a - x)};
  };
  p.beta = [](const Point& s, const Point& g) {
    double a = g[0], x = g[1], t = s[0];
    double n1 = (x + 1) * t + a - x - 1, n2 = x * t + a - x;
    return Point{n1 * n2 / (a * t), x * n1 / a};
  };
  p.margin = [](const Point& g, const Point& s) {
    double a = g[0], x = g[1], t = s[0];
    return std::min(std::abs(x * t + a - x), std::abs((x + 1) * t + a - x - 1));
  };
  p.matches = {
      {"quoted", "", rotation_case(4), cols2({-1, ratio(-1, 2)}, {0, ratio(-1, 4)}), 2},
      catalog_match("2+1/4.3?a=1", cols2({-1, ratio(-1, 2)}, {0, ratio(-1, 2)}), 1),
  };
  p.delta_m = [](const Point&, const Point&) { return 1.0; };
  p.kac_expected = false;
  return p;
}

GroupMatchedPair case43_negative() {
  GroupMatchedPair p;
  p.summary = "G = PSL2(R), G1 = R+ x R, G2 = circle";
  p.g = projective_matrix_group("G");
  p.g1 = affine_g1(Coord::Positive);
  p.g2 = circle_group("G2");
  p.embed1 = [](const Point& g) {
    double r = std::sqrt(g[0]);
    return Point{1 / r, 0.0, g[1] / r, r};
  };
  p.embed2 = [](const Point& z) {
    double h = std::atan2(z[1], z[0]) / 2;
    return Point{std::cos(h), std::sin(h), -std::sin(h), std::cos(h)};
  };
  p.alpha = [](const Point& g, const Point& z) {
    double a = g[0], x = g[1], c = z[0], s = z[1];
    double den = (x * x + a * a + 1) + (-x * x + a * a - 1) * c + 2 * a * x * s;
    return Point{((a * a + x * x - 1) + (a * a - x * x + 1) * c + 2 * a * x * s) / den,
                 (2 * x - 2 * x * c + 2 * a * s) / den};
  };
  p.beta = [](const Point& z, const Point& g) {
    double a = g[0], x = g[1], c = z[0], s = z[1];
    return Point{((x * x + a * a + 1) + (-x * x + a * a - 1) * c + 2 * a * x * s) / (2 * a),
                 ((x * x - a * a + 1) * s + 2 * a * x * c) / (2 * a)};
  };
  p.margin = [](const Point&, const Point&) { return kInf; };
  p.matches = {
      {"quoted", "", rotation_case(-4), cols2({-1, 0}, {0, ratio(1, 2)}), -2},
      catalog_match("2+1/4.3?a=-1", cols2({-1, 0}, {0, 1}), -1),
  };
  p.delta_m = [](const Point&, const Point&) { return 1.0; };
  p.kac_expected = false;
  return p;
}

GroupMatchedPair case43_zero() {
  GroupMatchedPair p;
  p.summary = "G = PSL2(R), G1 = R+ x R with (a,x)(b,y) = (ab, ay + x/b), G2 = R";
  p.g = projective_matrix_group("G");
  p.g1 = coordinate_group(
      "G1", {Coord::Positive, Coord::Additive}, {1.0, 0.0},
      [](const Point& a, const Point& b) { return Point{a[0] * b[0], a[0] * b[1] + a[1] / b[0]}; },
      [](const Point& a) { return Point{1 / a[0], -a[1]}; }, [](const Point& a) { return 1 / (a[0] * a[0]); });
  p.g2 = line_group("G2");
  p.embed1 = [](const Point& g) { return Point{g[0], g[1], 0.0, 1 / g[0]}; };
  p.embed2 = [](const Point& s) { return Point{1.0, 0.0, s[0], 1.0}; };
  p.alpha = [](const Point& g, const Point& s) { return Point{s[0] / (g[0] * (g[0] + g[1] * s[0]))}; };
  p.beta = [](const Point& s, const Point& g) {
    double v = g[0] + s[0] * g[1];
    return Point{std::abs(v), sgn(v) * g[1]};
  };
  p.margin = [](const Point& g, const Point& s) { return std::abs(g[0] + g[1] * s[0]); };
  p.matches = {catalog_match("2+1/4.3?a=0", cols2({ratio(-1, 2), 0}, {0, ratio(-1, 2)}), 1)};
  p.delta_m = [](const Point&, const Point&) { return 1.0; };
  p.kac_expected = false;
  return p;
}

// G1 = R^2, G2 = R, beta_s = exp(sB) linear, alpha trivial; G = R^2 x| R.
GroupMatchedPair linear_split(std::function<Point(double, const Point&)> flow, double trace, const std::string& algebra) {
  GroupMatchedPair p;
  p.summary = "G1 = R^2, G2 = R, beta_s = exp(sB), alpha trivial";
  p.g = coordinate_group(
      "G", {Coord::Additive, Coord::Additive, Coord::Additive}, {0.0, 0.0, 0.0},
      [flow](const Point& a, const Point& b) {
        Point m = flow(-a[2], {b[0], b[1]});
        return Point{a[0] + m[0], a[1] + m[1], a[2] + b[2]};
      },
      [flow](const Point& a) {
        Point m = flow(a[2], {a[0], a[1]});
        return Point{-m[0], -m[1], -a[2]};
      },
      [trace](const Point& a) { return std::exp(trace * a[2]); });
  p.g1 = coordinate_group(
      "G1", {Coord::Additive, Coord::Additive}, {0.0, 0.0},
      [](const Point& a, const Point& b) { return Point{a[0] + b[0], a[1] + b[1]}; },
      [](const Point& a) { return Point{-a[0], -a[1]}; }, [](const Point&) { return 1.0; });
  p.g2 = line_group("G2");
  p.embed1 = [](const Point& g) { return Point{g[0], g[1], 0.0}; };
  p.embed2 = [](const Point& s) { return Point{0.0, 0.0, s[0]}; };
  p.alpha = [](const Point&, const Point& s) { return s; };
  p.beta = [flow](const Point& s, const Point& g) { return flow(s[0], g); };
  p.margin = [](const Point&, const Point&) { return kInf; };
  p.matches = {catalog_match(algebra, Matrix::identity(2), 1)};
  p.alpha_trivial = true;
  p.kac_expected = true;
  return p;
}

GroupMatchedPair character_split(const Scalar& a_exact) {
  double a = to_double(a_exact);
  GroupMatchedPair p;
  p.summary = "G1 = R^2 with (u,y)(u',y') = (u+u', y + e^{au} y'), alpha_g(s) = e^u s, beta trivial";
  p.g = coordinate_group(
      "G", {Coord::Additive, Coord::Additive, Coord::Additive}, {0.0, 0.0, 0.0},
      [a](const Point& x, const Point& y) {
        return Point{x[0] + y[0], x[1] + std::exp(a * x[0]) * y[1], std::exp(-y[0]) * x[2] + y[2]};
      },
      [a](const Point& x) { return Point{-x[0], -std::exp(-a * x[0]) * x[1], -std::exp(x[0]) * x[2]}; },
      [a](const Point& x) { return std::exp(-(a + 1) * x[0]); });
  p.g1 = coordinate_group(
      "G1", {Coord::Additive, Coord::Additive}, {0.0, 0.0},
      [a](const Point& x, const Point& y) { return Point{x[0] + y[0], x[1] + std::exp(a * x[0]) * y[1]}; },
      [a](const Point& x) { return Point{-x[0], -std::exp(-a * x[0]) * x[1]}; },
      [a](const Point& x) { return std::exp(-a * x[0]); });
  p.g2 = line_group("G2");
  p.embed1 = [](const Point& g) { return Point{g[0], g[1], 0.0}; };
  p.embed2 = [](const Point& s) { return Point{0.0, 0.0, s[0]}; };
  p.alpha = [](const Point& g, const Point& s) { return Point{std::exp(g[0]) * s[0]}; };
  p.beta = [](const Point&, const Point& g) { return g; };
  p.margin = [](const Point&, const Point&) { return kInf; };
  p.matches = {catalog_match(format_entry_name("2+1/3", {{"a", a_exact}}), Matrix::identity(2), 1)};
  p.beta_trivial = true;
  p.kac_expected = true;
  return p;
}

}  // namespace

double signed_power(double s, double d) { return sgn(s) * std::pow(std::abs(s), d); }

double twist_term(double s, double d) {
  if (d == 1) return s * std::log(std::abs(s));
  return (signed_power(s, d) - s) / (d - 1);
}

const std::vector<std::string>& group_names() {
  static const std::vector<std::string> names = {
      "group/1+1",   "group/ex3.5",     "group/4.1",       "group/4.2",       "group/4.3+", "group/4.3-",
      "group/4.3=0", "group/split-1.1", "group/split-2.1", "group/split-2.3", "group/split-3"};
  return names;
}

std::set<std::string> group_parameter_keys(const std::string& base) {
  if (base == "group/ex3.5") return {"n"};
  if (base == "group/4.1") return {"b", "d"};
  if (base == "group/4.2") return {"d"};
  if (base == "group/split-2.1") return {"r"};
  if (base == "group/split-3") return {"a"};
  for (const auto& n : group_names())
    if (n == base) return {};
  throw std::invalid_argument("unknown group entry: " + base);
}

GroupMatchedPair make_group_pair(const std::string& base, const Params& given) {
  std::set<std::string> keys = group_parameter_keys(base);
  for (const auto& [k, v] : given)
    if (!keys.count(k)) throw std::invalid_argument("unknown parameter '" + k + "' for " + base);
  Params p = given;
  if (keys.count("n") && !p.count("n")) p["n"] = 2;
  if (keys.count("d") && !p.count("d")) p["d"] = -1;
  if (keys.count("b") && !p.count("b")) p["b"] = p["d"] == 1 ? 1 : 0;
  if (keys.count("r") && !p.count("r")) p["r"] = ratio(1, 2);
  if (keys.count("a") && !p.count("a")) p["a"] = -1;

  GroupMatchedPair out;
  if (base == "group/1+1") {
    out = one_plus_one();
  } else if (base == "group/ex3.5") {
    out = power_extension(p["n"]);
  } else if (base == "group/4.1") {
    out = case41(p["d"], p["b"]);
  } else if (base == "group/4.2") {
    out = case42(p["d"]);
  } else if (base == "group/4.3+") {
    out = case43_positive();
  } else if (base == "group/4.3-") {
    out = case43_negative();
  } else if (base == "group/4.3=0") {
    out = case43_zero();
  } else if (base == "group/split-1.1") {
    out = linear_split([](double, const Point& g) { return g; }, 0, "2+1/1.1");
    out.beta_trivial = true;
  } else if (base == "group/split-2.1") {
    Scalar r = p["r"];
    if (r < -1 || r > 1) throw std::invalid_argument("split-2.1 requires -1 <= r <= 1");
    double rd = to_double(r);
    out = linear_split([rd](double s, const Point& g) { return Point{std::exp(s) * g[0], std::exp(rd * s) * g[1]}; },
                       1 + rd, format_entry_name("2+1/2.1", {{"r", r}}));
  } else if (base == "group/split-2.3") {
    out = linear_split([](double s, const Point& g) { return Point{g[0], g[1] + s * g[0]}; }, 0, "2+1/2.3");
  } else if (base == "group/split-3") {
    out = character_split(p["a"]);
  }
  out.name = base;
  out.params = p;
  finish(out);
  return out;
}

GroupMatchedPair group_pair(std::string_view full_name) {
  EntryName n = parse_entry_name(full_name);
  return make_group_pair(n.base, parse_params(n, group_parameter_keys(n.base)));
}

std::vector<GroupMatchedPair> catalog_group_pairs() {
  std::vector<GroupMatchedPair> out;
  for (const auto& n : group_names()) out.push_back(make_group_pair(n));
  return out;
}

}  // namespace bicross
