#pragma once

#include <random>
#include <vector>

#include "bicross/catalog.hpp"
#include "bicross/linalg.hpp"
#include "bicross/matched_pair.hpp"

namespace bicross::testing {

// Small exact rationals and integer-valued draws from a seeded engine.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(unsigned long long seed) : engine(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  Scalar rational(int range = 5) { return ratio(uniform(-range, range), uniform(1, 4)); }
  Scalar nonzero(int range = 5) {
    Scalar s = 0;
    while (s == 0) s = rational(range);
    return s;
  }
  Vector vector(std::size_t n, int range = 5) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(range));
    return v;
  }
  Matrix matrix(std::size_t r, std::size_t c, int range = 5) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(range);
    return m;
  }
  Matrix invertible(std::size_t n) {
    while (true) {
      Matrix m = matrix(n, n, 3);
      if (determinant(m) != 0) return m;
    }
  }
};

// Data in the basis f_i = T e_i: brackets T^-1 [T e_i, T e_j], chi T and
// T^-1 beta T.
inline NPlus1Data transport(const NPlus1Data& d, const Matrix& t) {
  std::size_t n = d.g1.dim();
  Matrix ti = inverse(t);
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = ti * d.g1.bracket(t.column(i), t.column(j));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
    }
  NPlus1Data out;
  out.g1 = LieAlgebra(d.g1.labels(), std::move(c));
  out.chi.assign(n, Scalar(0));
  for (std::size_t j = 0; j < n; ++j) out.chi[j] = dot(d.chi, t.column(j));
  out.beta = ti * d.beta * t;
  out.generator = d.generator;
  return out;
}

// All beta compatible with (g1, chi): the defining identity is linear in beta.
inline std::vector<Matrix> beta_solutions(const LieAlgebra& g, const Vector& chi) {
  std::size_t n = g.dim();
  std::vector<Vector> rows;
  // unknown index: beta(p, q) -> p * n + q
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n, Scalar(0));
        // beta([e_i, e_j])_k
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] += g.constant(i, j, m);
        // - [e_i, beta e_j]_k - [beta e_i, e_j]_k
        for (std::size_t p = 0; p < n; ++p) {
          row[p * n + j] -= g.constant(i, p, k);
          row[p * n + i] -= g.constant(p, j, k);
        }
        // - beta(e_i)_k chi_j + beta(e_j)_k chi_i
        row[k * n + i] -= chi[j];
        row[k * n + j] += chi[i];
        rows.push_back(row);
      }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(Matrix::from_rows(n * n, rows))) {
    Matrix b(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) b(p, q) = v[p * n + q];
    out.push_back(b);
  }
  return out;
}

// Valid data: a random catalog (g1, chi), a random beta from the solution
// space, then a random change of basis.
inline NPlus1Data random_nplus1(Rng& rng) {
  const auto& names = catalog_names();
  std::string base = names[rng.uniform(0, static_cast<int>(names.size()) - 1)];
  Params p;
  if (base == "2+1/2.1") p["r"] = Scalar(rng.uniform(-4, 4), 4);
  if (base == "2+1/3") p["a"] = rng.rational(3);
  if (base == "2+1/4.1") {
    p["d"] = rng.rational(3);
    p["b"] = p["d"] == 1 ? rng.rational(3) : Scalar(0);
  }
  if (base == "2+1/4.2") p["d"] = rng.rational(3);
  if (base == "2+1/4.3") p["a"] = rng.uniform(-1, 1);
  NPlus1Data d = make_catalog_entry(base, p).data;
  auto sols = beta_solutions(d.g1, d.chi);
  Matrix beta(d.g1.dim(), d.g1.dim());
  for (const auto& s : sols) beta = beta + rng.rational(3) * s;
  d.beta = beta;
  return transport(d, rng.invertible(d.g1.dim()));
}

}  // namespace bicross::testing
