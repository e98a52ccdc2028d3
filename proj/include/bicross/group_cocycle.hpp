#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicross/group_checks.hpp"
#include "bicross/principal_value.hpp"

namespace bicross {

enum class CocycleMode { Closed, Pv };

std::string mode_name(CocycleMode m);
CocycleMode parse_mode(const std::string& s);

// A residual of an identity that only holds mod 2 pi, mapped to (-pi, pi].
struct AngleResidual {
  double value = 0;
  static AngleResidual of(double raw);
};

using PairFunction = std::function<double(const Point&, const Point&)>;

// A(g, h, s) = lambda * P-integral from the base point of G2 to s of
// f(phi_r(g, h)) w(r) dr, phi_r(g, h) = (beta_{alpha_h(r)}(g), beta_r(h)),
// with r the global coordinate of G2 and w = 1/r on R*, 1 otherwise.
struct CocycleSpec {
  std::string entry;  // group entry full name
  double lambda = 1;
  CocycleMode mode = CocycleMode::Pv;
  PairFunction generator;  // f at lambda = 1
  // Optional transcription of r -> f(phi_r(g, h)) w(r) at lambda = 1;
  // otherwise composed from the actions.
  std::function<double(const Point&, const Point&, double)> flow_integrand;
  // Closed form of A at lambda = 1, when known.
  std::function<double(const Point&, const Point&, const Point&)> closed_form;
  // Affine factors in r whose zeros are the singular points of the integrand.
  std::function<std::vector<std::function<double(double)>>(const Point&, const Point&)> factors;
  bool log_measure = false;  // w = 1/r
  double base = 0;           // coordinate of the identity of G2
};

// Entries with a cocycle recipe, as group entry names.
std::vector<std::string> cocycle_entries();

// Throws std::invalid_argument for entries without a recipe or Closed mode
// where no closed form is known.
CocycleSpec cocycle_spec(const std::string& entry, double lambda, CocycleMode mode = CocycleMode::Pv);

// Group entry carrying the cocycle recipe for an algebra catalog entry, if any.
std::optional<std::string> cocycle_entry_for_algebra(const std::string& algebra_entry);

// The flow integrand at lambda = 1 composed from the actions of the pair.
double composed_integrand(const CocycleSpec& spec, const GroupMatchedPair& pair, const Point& g, const Point& h,
                          double r);

// Singular points of the integrand between the base point and r_end.
std::vector<double> singular_points(const CocycleSpec& spec, const Point& g, const Point& h, double r_end);

// Raw value (not reduced mod 2 pi). Zero at the base point. Throws
// PvDivergence or std::domain_error from the integrator.
double cocycle_value(const CocycleSpec& spec, const GroupMatchedPair& pair, const Point& g, const Point& h,
                     const Point& s);

struct GeneratorReport {
  double max_residual = 0;  // relative, |lhs - rhs| / (1 + max |term|)
  std::size_t samples = 0;
};

// chi(k) f(g, h) + f(gh, k) = f(h, k) + f(g, hk) with chi(k) the derivative
// of t -> alpha_k(t) at the identity.
GeneratorReport infinitesimal_generator_check(const GroupMatchedPair& pair, const PairFunction& f,
                                              const SampleConfig& cfg);

struct CocycleReport {
  std::string entry;
  double lambda = 0;
  CocycleMode mode = CocycleMode::Pv;
  double product_residual = 0;  // A(g,h,alpha_k(s)) + A(gh,k,s) - A(h,k,s) - A(g,hk,s)
  double flow_residual = 0;     // A(g,h,s) + A(phi_s(g,h),t) - A(g,h,ts)
  double base_residual = 0;     // A(g,h,base)
  std::size_t samples = 0;
  std::size_t skipped = 0;  // points where the integrator gave up
  double tol = 0;

  double max_residual() const;
  bool passed() const { return samples > 0 && max_residual() <= tol; }
};

// Default tolerance per mode: 1e-9 closed, 1e-5 principal value.
double default_cocycle_tol(CocycleMode m);

CocycleReport check_group_cocycle(const CocycleSpec& spec, const GroupMatchedPair& pair, const SampleConfig& cfg,
                                  std::optional<double> tol = std::nullopt);

// Values of the grid where check_group_cocycle passes.
std::vector<double> quantization_scan(const std::string& entry, CocycleMode mode, const std::vector<double>& grid,
                                      const SampleConfig& cfg);

// Closed form H(a, x) = -4 pi arctan(x / (1 + a)).
double torus_potential(double a, double x);

struct TorusObstruction {
  double quadrature = 0;   // lambda * integral over one turn of f(phi)
  double closed_form = 0;  // lambda (H(a,x) + H(b,y) - H(ab, x+ay))
  double difference = 0;
};

// Requires a, b > 0.
TorusObstruction torus_obstruction(double a, double x, double b, double y, double lambda);

// Searches for a point of G1 x G1 where the obstruction is not a multiple of
// 2 pi; returns its angle residual (0 only when lambda = 0 or none was found).
double torus_witness(double lambda, const SampleConfig& cfg);

}  // namespace bicross
