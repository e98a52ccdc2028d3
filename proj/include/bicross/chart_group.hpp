#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace bicross {

using Point = std::vector<double>;

// Spreads for sampling and the domain margin below which a draw is rejected.
struct SampleConfig {
  std::size_t count = 1000;
  unsigned long long seed = 1;
  double tol = 1e-9;
  double log_spread = 1.0;   // multiplicative coordinates: |x| = exp(U(-spread, spread))
  double sigma = 1.0;        // additive coordinates: N(0, sigma)
  double min_margin = 1e-2;  // rejection threshold for partial actions
};

enum class Coord { Additive, Multiplicative, Positive };

// A Lie group given by coordinates. Points may carry more numbers than the
// dimension (torus points are (cos t, sin t), matrices are stored row-major);
// to_local/from_local is a chart near the identity with identity -> 0.
struct ChartGroup {
  std::string name;
  std::size_t dim = 0;
  Point identity;
  std::function<Point(const Point&, const Point&)> multiply;
  std::function<Point(const Point&)> inverse;
  std::function<Point(const Point&)> to_local;
  std::function<Point(const Point&)> from_local;
  std::function<double(const Point&)> modular;  // closed form
  std::function<bool(const Point&)> contains;
  std::function<double(const Point&, const Point&)> distance;
  // Global coordinates on the sampled region, used for Haar densities;
  // empty for the ambient matrix groups.
  std::function<Point(const Point&)> coords;
  std::function<Point(const Point&)> from_coords;
  bool periodic = false;  // coordinate differences are taken modulo 2 pi
  std::vector<Coord> kinds;  // per coordinate, for the default sampler
  std::function<Point(std::mt19937_64&, const SampleConfig&)> sampler;

  Point sample(std::mt19937_64& rng, const SampleConfig& cfg) const;
};

// c - base, wrapped into (-pi, pi] for periodic groups.
Point coordinate_difference(const ChartGroup& g, const Point& c, const Point& base);

// Per coordinate |x - y| / (1 + max(|x|, |y|)), maximized.
double relative_distance(const Point& x, const Point& y);

// Groups whose points are their coordinates; local chart is p - identity.
ChartGroup coordinate_group(std::string name, std::vector<Coord> kinds, Point identity,
                            std::function<Point(const Point&, const Point&)> multiply,
                            std::function<Point(const Point&)> inverse, std::function<double(const Point&)> modular);

// The circle as (cos t, sin t) with the angle as chart.
ChartGroup circle_group(std::string name);

// 2x2 real matrices with determinant +-1 modulo +-1, stored row-major.
ChartGroup projective_matrix_group(std::string name);

Point matmul2(const Point& a, const Point& b);

// delta(g) = 1 / |det Ad(g)|, the Jacobian of h -> g h g^-1 at e taken by
// central differences with one Richardson step.
double modular_oracle(const ChartGroup& g, const Point& p, double h = 1e-3);

// Density of left Haar measure in the global coordinates:
// 1 / |det d(g h)/dh| at h = e.
double left_haar_density(const ChartGroup& g, const Point& p, double h = 1e-4);

struct AxiomResiduals {
  double associativity = 0;
  double inverse = 0;
  double unit = 0;
};

AxiomResiduals group_axiom_residuals(const ChartGroup& g, const SampleConfig& cfg);

// Small dense helpers on row-major square matrices.
double dense_determinant(std::vector<double> m, std::size_t n);

}  // namespace bicross
