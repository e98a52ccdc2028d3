#pragma once

#include <optional>
#include <vector>

#include "bicross/matched_pair.hpp"

namespace bicross {

struct CohomologyResult {
  std::vector<TwoCocycle> cocycles;
  std::vector<TwoCocycle> coboundaries;
  std::size_t ext_dim = 0;
  // Cocycle outside the coboundaries, scaled so its first nonzero value
  // U(e_i, e_j), i < j, equals 1. Absent when ext_dim = 0.
  std::optional<TwoCocycle> generator;
};

// U([X,Y],Z) + chi(X) U(Y,Z) + cyclic = 0 on every basis triple.
bool is_cocycle(const NPlus1Data& data, const TwoCocycle& u);
// U(X,Y) = rho([X,Y]) + chi(X) rho(Y) - chi(Y) rho(X).
TwoCocycle coboundary(const NPlus1Data& data, const Vector& rho);

std::vector<TwoCocycle> cocycle_space(const NPlus1Data& data);
std::vector<TwoCocycle> coboundary_space(const NPlus1Data& data);
std::size_t extension_group_dim(const NPlus1Data& data);
CohomologyResult compute_cohomology(const NPlus1Data& data);

}  // namespace bicross
