#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace bicross {

struct PvResult {
  double value = 0;
  double error = 0;
};

// Thrown when the excision sequence does not settle: the singularity is not
// of principal-value type.
struct PvDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PvOptions {
  double tol = 1e-12;     // relative stopping threshold of the extrapolated sequence
  double accept = 1e-8;   // worst relative step still accepted once the sequence stalls
  int max_halvings = 48;
  int min_halvings = 8;
};

// Zeros in (lo, hi) of each factor, located by sign change and toms748.
// Infinite bounds are bracketed by doubling outward. Factors are assumed to
// change sign at most once on the interval (affine in practice).
std::vector<double> bracket_roots(const std::vector<std::function<double(double)>>& factors, double lo, double hi);

// Principal value of the integral of f over [lo, hi] with symmetric excision
// around each listed point and, when lo = -inf and hi = +inf, symmetric
// truncation at infinity. The excision radius runs through eps0 * 2^-k and
// the partial sums are Richardson-extrapolated twice (eps log eps, then eps).
// lo > hi flips the sign. Throws std::domain_error if a listed point sits on
// a finite bound, std::invalid_argument for a one-sided infinite range, and
// PvDivergence when the extrapolation fails to settle.
PvResult pv_integral(const std::function<double(double)>& f, double lo, double hi, std::vector<double> singular,
                     const PvOptions& opt = {});

// Plain adaptive quadrature on a finite interval without interior singularities.
PvResult regular_integral(const std::function<double(double)>& f, double lo, double hi);

}  // namespace bicross
