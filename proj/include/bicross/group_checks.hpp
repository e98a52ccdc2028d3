#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicross/group_catalog.hpp"

namespace bicross {

// Max residual per named identity over the sampled points.
struct ResidualReport {
  std::map<std::string, double> max_residual;
  std::size_t samples = 0;
  double tol = 0;

  void record(const std::string& name, double value);
  double worst() const;
  bool ok() const { return worst() <= tol; }
};

// Draws (g, s) in the domain with margin >= cfg.min_margin; throws
// std::runtime_error when no such point turns up.
struct DomainSampler {
  const GroupMatchedPair& pair;
  SampleConfig cfg;
  std::mt19937_64 rng;

  DomainSampler(const GroupMatchedPair& p, const SampleConfig& c) : pair(p), cfg(c), rng(c.seed) {}
  bool inside(const Point& g, const Point& s) const;
  std::pair<Point, Point> draw();
};

// The mutual-action identities (products, composition, factorization through
// i and j, units) plus homomorphy of i and j, over cfg.count sampled points.
ResidualReport check_group_matched_pair(const GroupMatchedPair& pair, const SampleConfig& cfg);

// Finite-difference estimate of [e_i, e_j], chi and beta at the identity.
// constants[(i*n + j)*n + k]; beta[k*n + j] is the e_k coefficient of beta(e_j).
struct InfinitesimalEstimate {
  std::size_t n = 0;
  std::vector<double> constants;
  std::vector<double> chi;
  std::vector<double> beta;
  double error = 0;
};

InfinitesimalEstimate infinitesimal_data(const GroupMatchedPair& pair, double h = 1e-3);

struct MatchReport {
  std::string label;
  double deviation = 0;
  double error = 0;
  double tol = 0;
  bool ok() const { return deviation <= tol; }
};

// Compares the estimate to image_data(match.source, match.t, match.s).
MatchReport match_to_catalog(const InfinitesimalEstimate& est, const AlgebraMatch& match, double tol = 1e-5);

// Closed form; throws std::domain_error when the point is not in the group.
double modular_function(const ChartGroup& g, const Point& p);

struct KacReport {
  double eq1_deviation = 0;  // max |lhs - 1| of the first equality
  double eq2_deviation = 0;  // max relative gap of the second equality
  bool eq1 = false;
  bool eq2 = false;
  // delta_M = delta_2(alpha_g(s)) / delta(j(alpha_g(s))) against the closed form.
  std::optional<double> delta_m_residual;
  std::optional<double> delta_m_hat_residual;
  double delta_m_unit_deviation = 0;  // max |delta_M - 1|
  double modular_oracle_residual = 0;  // closed forms of G, G1, G2 against the numeric oracle
  std::size_t samples = 0;

  bool kac() const { return eq1 && eq2; }
};

KacReport kac_criterion(const GroupMatchedPair& pair, const SampleConfig& cfg);

// Whether alpha and beta preserve the modular functions and the left Haar
// measures at the sampled points.
bool preserves_modular_and_haar(const GroupMatchedPair& pair, const SampleConfig& cfg);

}  // namespace bicross
