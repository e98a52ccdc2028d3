#include "bicross/cohomology.hpp"

#include <stdexcept>
#include <utility>

namespace bicross {

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Pairs upper_pairs(std::size_t n) {
  Pairs p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return p;
}

Vector flatten(const TwoCocycle& u, const Pairs& pairs) {
  Vector v;
  for (auto [i, j] : pairs) v.push_back(u.form(i, j));
  return v;
}

TwoCocycle unflatten(std::size_t n, const Vector& v, const Pairs& pairs) {
  TwoCocycle u = zero_cocycle(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    u.form(pairs[k].first, pairs[k].second) = v[k];
    u.form(pairs[k].second, pairs[k].first) = -v[k];
  }
  return u;
}

Scalar cyclic_sum(const NPlus1Data& d, const TwoCocycle& u, const Vector& x, const Vector& y, const Vector& z) {
  const LieAlgebra& g = d.g1;
  return u(g.bracket(x, y), z) + d.chi_of(x) * u(y, z) + u(g.bracket(y, z), x) + d.chi_of(y) * u(z, x) +
         u(g.bracket(z, x), y) + d.chi_of(z) * u(x, y);
}

}  // namespace

bool is_cocycle(const NPlus1Data& data, const TwoCocycle& u) {
  std::size_t n = data.g1.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        if (cyclic_sum(data, u, unit_vector(n, i), unit_vector(n, j), unit_vector(n, l)) != 0) return false;
  return true;
}

TwoCocycle coboundary(const NPlus1Data& data, const Vector& rho) {
  std::size_t n = data.g1.dim();
  if (rho.size() != n) throw std::invalid_argument("coboundary: rho has wrong length");
  TwoCocycle u = zero_cocycle(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      u.form(i, j) = dot(rho, data.g1.basis_bracket(i, j)) + data.chi[i] * rho[j] - data.chi[j] * rho[i];
  return u;
}

std::vector<TwoCocycle> cocycle_space(const NPlus1Data& data) {
  std::size_t n = data.g1.dim();
  Pairs pairs = upper_pairs(n);
  if (pairs.empty()) return {};
  // One linear equation per basis triple; the unknowns are U(e_i, e_j), i < j.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        Vector row;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          TwoCocycle e = elementary_cocycle(n, pairs[k].first, pairs[k].second, 1);
          row.push_back(cyclic_sum(data, e, unit_vector(n, i), unit_vector(n, j), unit_vector(n, l)));
        }
        rows.push_back(row);
      }
  std::vector<Vector> basis;
  if (rows.empty()) {
    for (std::size_t k = 0; k < pairs.size(); ++k) basis.push_back(unit_vector(pairs.size(), k));
  } else {
    basis = nullspace(Matrix::from_rows(pairs.size(), rows));
  }
  std::vector<TwoCocycle> out;
  for (const auto& v : basis) out.push_back(unflatten(n, v, pairs));
  return out;
}

std::vector<TwoCocycle> coboundary_space(const NPlus1Data& data) {
  std::size_t n = data.g1.dim();
  Pairs pairs = upper_pairs(n);
  std::vector<Vector> kept;
  std::vector<TwoCocycle> out;
  for (std::size_t k = 0; k < n; ++k) {
    TwoCocycle u = coboundary(data, unit_vector(n, k));
    Vector v = flatten(u, pairs);
    kept.push_back(v);
    if (rank_of(kept, pairs.size()) < kept.size()) {
      kept.pop_back();
      continue;
    }
    out.push_back(u);
  }
  return out;
}

std::size_t extension_group_dim(const NPlus1Data& data) {
  return cocycle_space(data).size() - coboundary_space(data).size();
}

CohomologyResult compute_cohomology(const NPlus1Data& data) {
  CohomologyResult r;
  r.cocycles = cocycle_space(data);
  r.coboundaries = coboundary_space(data);
  r.ext_dim = r.cocycles.size() - r.coboundaries.size();
  std::size_t n = data.g1.dim();
  Pairs pairs = upper_pairs(n);
  std::vector<Vector> span;
  for (const auto& c : r.coboundaries) span.push_back(flatten(c, pairs));
  for (const auto& z : r.cocycles) {
    Vector v = flatten(z, pairs);
    if (in_span(span, v)) continue;
    Scalar lead = 0;
    for (const auto& x : v)
      if (x != 0) {
        lead = x;
        break;
      }
    r.generator = unflatten(n, scaled(1 / lead, v), pairs);
    break;
  }
  return r;
}

}  // namespace bicross
