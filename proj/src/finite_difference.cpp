#include "bicross/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bicross {

namespace {

using Vec = std::vector<double>;

Vec combine(const Vec& a, double ca, const Vec& b, double cb) {
  if (a.size() != b.size()) throw std::invalid_argument("finite difference: inconsistent output size");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ca * a[i] + cb * b[i];
  return r;
}

Estimate richardson(const std::function<Vec(double)>& stencil, double h) {
  if (!(h > 0) || h < 1e-12) throw std::invalid_argument("finite difference: step underflow");
  Vec coarse = stencil(h), fine = stencil(h / 2);
  Estimate e;
  e.value = combine(fine, 4.0 / 3.0, coarse, -1.0 / 3.0);
  for (std::size_t i = 0; i < fine.size(); ++i) e.error = std::max(e.error, std::abs(fine[i] - coarse[i]) / 3.0);
  for (double v : e.value)
    if (!std::isfinite(v)) throw std::domain_error("finite difference: non-finite value near the base point");
  return e;
}

}  // namespace

Estimate derivative(const std::function<Vec(double)>& f, double h) {
  return richardson([&](double s) { return combine(f(s), 0.5 / s, f(-s), -0.5 / s); }, h);
}

Estimate mixed_derivative(const std::function<Vec(double, double)>& f, double h) {
  return richardson(
      [&](double s) {
        Vec pp = f(s, s), pm = f(s, -s), mp = f(-s, s), mm = f(-s, -s);
        double c = 1.0 / (4 * s * s);
        return combine(combine(pp, c, pm, -c), 1.0, combine(mp, -c, mm, c), 1.0);
      },
      h);
}

}  // namespace bicross
