#include "bicross/principal_value.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace bicross {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Finite stand-in for an infinite bound: doubles outward until f(x) has the
// sign of f at infinity or the range is exhausted.
double far_point(const std::function<double(double)>& f, double direction, double anchor, double target_sign) {
  double step = 1;
  for (int k = 0; k < 1100; ++k, step *= 2) {
    double x = anchor + direction * step;
    if (!std::isfinite(x)) break;
    if (sign_of(f(x)) == target_sign) return x;
  }
  return anchor;
}

double limit_sign(const std::function<double(double)>& f, double direction) {
  return sign_of(f(direction * std::ldexp(1.0, 900)));
}

}  // namespace

std::vector<double> bracket_roots(const std::vector<std::function<double(double)>>& factors, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> roots;
  for (const auto& f : factors) {
    double a = lo, b = hi;
    double fa = std::isfinite(a) ? f(a) : limit_sign(f, -1);
    double fb = std::isfinite(b) ? f(b) : limit_sign(f, 1);
    if (fa == 0 && std::isfinite(a)) {
      roots.push_back(a);
      continue;
    }
    if (fb == 0 && std::isfinite(b)) {
      roots.push_back(b);
      continue;
    }
    if (sign_of(fa) * sign_of(fb) >= 0) continue;
    if (!std::isfinite(a)) a = far_point(f, -1, std::isfinite(b) ? b : 0.0, sign_of(fa));
    if (!std::isfinite(b)) b = far_point(f, 1, a, sign_of(fb));
    fa = f(a);
    fb = f(b);
    if (fa == 0) {
      roots.push_back(a);
      continue;
    }
    if (fb == 0) {
      roots.push_back(b);
      continue;
    }
    if (sign_of(fa) * sign_of(fb) > 0) continue;
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), iters);
    roots.push_back(0.5 * (r.first + r.second));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

PvResult regular_integral(const std::function<double(double)>& f, double lo, double hi) {
  if (lo == hi) return {};
  double err = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 10, 1e-12, &err);
  if (!std::isfinite(v)) throw std::domain_error("regular_integral: non-finite value");
  return {v, err};
}

namespace {

// Limit as eps -> 0 of the integral of f(c+u) + f(c-u) over [eps, delta].
// Rounding in c leaves a residual pole of size ~ulp(c)/eps, so the sequence is
// followed only while it improves and the best extrapolant is kept.
PvResult folded_window(const std::function<double(double)>& f, double c, double delta, const PvOptions& opt) {
  auto g = [&](double u) { return f(c + u) + f(c - u); };
  double t0_prev = 0, r1_prev = 0, r2_prev = 0;
  double t0 = 0;
  double best = 0, best_diff = std::numeric_limits<double>::infinity();
  int settled = 0, worse = 0;
  double hi = delta;
  for (int k = 1; k <= opt.max_halvings; ++k) {
    double lo = hi / 2;
    // [eps, 2 eps] sits at a fixed ratio from the singularity: a fixed rule suffices.
    t0 += boost::math::quadrature::gauss<double, 30>::integrate(g, lo, hi);
    hi = lo;
    double r1 = 2 * t0 - t0_prev;
    double r2 = 2 * r1 - r1_prev;
    if (!std::isfinite(r2)) break;
    if (k >= 3) {
      double diff = std::abs(r2 - r2_prev);
      if (diff < best_diff) {
        best_diff = diff;
        best = r2;
        worse = 0;
      } else if (++worse >= 3 && k >= opt.min_halvings) {
        break;
      }
      if (diff <= opt.tol * (1 + std::abs(r2))) {
        if (++settled >= 2 && k >= opt.min_halvings) return {r2, diff};
      } else {
        settled = 0;
      }
    }
    t0_prev = t0;
    r1_prev = r1;
    r2_prev = r2;
  }
  if (best_diff <= opt.accept * (1 + std::abs(best))) return {best, best_diff};
  throw PvDivergence("principal value: excision sequence did not converge near " + std::to_string(c));
}

PvResult finite_pv(const std::function<double(double)>& f, double lo, double hi, const std::vector<double>& pts,
                   const PvOptions& opt) {
  PvResult out;
  auto add = [&](const PvResult& r) {
    out.value += r.value;
    out.error += r.error;
  };
  std::vector<double> delta(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double left = i == 0 ? pts[i] - lo : (pts[i] - pts[i - 1]) / 2;
    double right = i + 1 == pts.size() ? hi - pts[i] : (pts[i + 1] - pts[i]) / 2;
    delta[i] = 0.8 * std::min(left, right);
  }
  double cursor = lo;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    add(regular_integral(f, cursor, pts[i] - delta[i]));
    add(folded_window(f, pts[i], delta[i], opt));
    cursor = pts[i] + delta[i];
  }
  add(regular_integral(f, cursor, hi));
  return out;
}

}  // namespace

PvResult pv_integral(const std::function<double(double)>& f, double lo, double hi, std::vector<double> singular,
                     const PvOptions& opt) {
  if (std::isnan(lo) || std::isnan(hi)) throw std::invalid_argument("pv_integral: NaN bound");
  if (lo == hi) return {};
  if (lo > hi) {
    PvResult r = pv_integral(f, hi, lo, std::move(singular), opt);
    return {-r.value, r.error};
  }
  bool infinite = std::isinf(lo) || std::isinf(hi);
  if (infinite && !(lo == -kInf && hi == kInf))
    throw std::invalid_argument("pv_integral: only the full line is allowed as an infinite range");

  std::sort(singular.begin(), singular.end());
  singular.erase(std::unique(singular.begin(), singular.end()), singular.end());

  if (!infinite) {
    std::vector<double> inside;
    double guard = 1e-13 * (1 + std::max(std::abs(lo), std::abs(hi)));
    for (double c : singular) {
      if (std::abs(c - lo) <= guard || std::abs(c - hi) <= guard)
        throw std::domain_error("pv_integral: singular point on the boundary");
      if (c > lo && c < hi) inside.push_back(c);
    }
    return finite_pv(f, lo, hi, inside, opt);
  }

  double reach = 1;
  for (double c : singular) reach = std::max(reach, 2 * std::abs(c) + 1);
  PvResult core = finite_pv(f, -reach, reach, singular, opt);
  auto tail = [&](double u) { return f(u) + f(-u); };
  double err = 0;
  boost::math::quadrature::exp_sinh<double> es;
  double t = es.integrate(tail, reach, kInf, 1e-12, &err);
  if (!std::isfinite(t)) throw PvDivergence("principal value: tails do not cancel");
  return {core.value + t, core.error + err};
}

}  // namespace bicross
