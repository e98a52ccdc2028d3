#include "bicross/lie_algebra.hpp"

#include <stdexcept>

namespace bicross {

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), c_(labels_.size() * labels_.size() * labels_.size(), Scalar(0)) {}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Scalar> constants)
    : labels_(std::move(labels)), c_(std::move(constants)) {
  std::size_t n = labels_.size();
  if (c_.size() != n * n * n) throw std::invalid_argument("structure constants: expected dim^3 entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (constant(i, j, k) != -constant(j, i, k))
          throw std::invalid_argument("structure constants are not antisymmetric at (" + labels_[i] + ", " +
                                      labels_[j] + ")");
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels, const std::vector<BracketRule>& rules) {
  LieAlgebra g(std::move(labels));
  std::size_t n = g.dim();
  for (const auto& rule : rules) {
    std::size_t i = g.index_of(rule.a), j = g.index_of(rule.b);
    if (i == j) throw std::invalid_argument("bracket rule pairs a basis vector with itself: " + rule.a);
    Vector v = g.vector(rule.value);
    for (std::size_t k = 0; k < n; ++k) {
      g.c_[(i * n + j) * n + k] = v[k];
      g.c_[(j * n + i) * n + k] = -v[k];
    }
  }
  return g;
}

std::size_t LieAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown basis label: " + std::string(label));
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = constant(i, j, k);
  return v;
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      Scalar w = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) r[k] += w * constant(i, j, k);
    }
  }
  return r;
}

Vector LieAlgebra::vector(const std::vector<Term>& terms) const {
  Vector v = zero_vector(dim());
  for (const auto& [label, coef] : terms) v[index_of(label)] += coef;
  return v;
}

LieAlgebra LieAlgebra::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != dim()) throw std::invalid_argument("relabel: wrong number of labels");
  return LieAlgebra(std::move(labels), c_);
}

JacobiReport check_jacobi(const LieAlgebra& g) {
  JacobiReport report;
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), el = unit_vector(n, l);
        Vector s = add(add(g.bracket(g.basis_bracket(i, j), el), g.bracket(g.basis_bracket(j, l), ei)),
                       g.bracket(g.basis_bracket(l, i), ej));
        if (!is_zero(s)) report.violations.push_back({i, j, l, s});
      }
  return report;
}

Matrix adjoint(const LieAlgebra& g, const Vector& u) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < g.dim(); ++j) cols.push_back(g.bracket(u, unit_vector(g.dim(), j)));
  return Matrix::from_columns(g.dim(), cols);
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis) : ambient_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_) throw std::invalid_argument("subspace: vector of wrong dimension");
  if (rank_of(basis_, ambient_) != basis_.size()) throw std::invalid_argument("subspace: dependent basis");
}

bool Subspace::contains(const Vector& v) const { return in_span(basis_, v); }

Vector Subspace::coordinates(const Vector& v) const {
  if (basis_.empty()) {
    if (!is_zero(v)) throw std::invalid_argument("vector outside subspace");
    return {};
  }
  auto x = solve(Matrix::from_columns(ambient_, basis_), v);
  if (!x) throw std::invalid_argument("vector outside subspace");
  return *x;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(g.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(g.bracket(unit_vector(g.dim(), i), v))) return false;
  return true;
}

Subspace center(const LieAlgebra& g) {
  // u is central iff sum_i u_i c(i, j, k) = 0 for every (j, k).
  std::size_t n = g.dim();
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = g.constant(i, j, k);
  return Subspace(n, nullspace(m));
}

Subspace derived_algebra(const LieAlgebra& g) {
  std::vector<Vector> spanning;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) spanning.push_back(g.basis_bracket(i, j));
  std::vector<Vector> basis;
  for (auto& v : spanning) {
    basis.push_back(v);
    if (rank_of(basis, g.dim()) < basis.size()) basis.pop_back();
  }
  return Subspace(g.dim(), basis);
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation: wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d * g.basis_bracket(i, j);
      Vector rhs = add(g.bracket(d.column(i), unit_vector(n, j)), g.bracket(unit_vector(n, i), d.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& map) {
  if (map.rows() != to.dim() || map.cols() != from.dim()) throw std::invalid_argument("homomorphism: wrong shape");
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = i + 1; j < from.dim(); ++j)
      if (map * from.basis_bracket(i, j) != to.bracket(map.column(i), map.column(j))) return false;
  return true;
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s, std::vector<std::string> labels) {
  std::size_t m = s.dim();
  if (labels.size() != m) throw std::invalid_argument("restrict_to: wrong number of labels");
  std::vector<Scalar> c(m * m * m, Scalar(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector x = s.coordinates(g.bracket(s.basis()[i], s.basis()[j]));
      for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = x[k];
    }
  return LieAlgebra(std::move(labels), std::move(c));
}

}  // namespace bicross
