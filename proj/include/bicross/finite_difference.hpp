#pragma once

#include <functional>
#include <vector>

namespace bicross {

// Value plus the step-halving discrepancy as error estimate.
struct Estimate {
  std::vector<double> value;
  double error = 0;
};

// f'(0) by central differences at h and h/2 combined by Richardson.
Estimate derivative(const std::function<std::vector<double>(double)>& f, double h);

// d^2 f / du dv at (0, 0), same scheme.
Estimate mixed_derivative(const std::function<std::vector<double>(double, double)>& f, double h);

}  // namespace bicross
