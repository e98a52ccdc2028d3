#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicross/linalg.hpp"
#include "bicross/scalar.hpp"

namespace bicross {

using Term = std::pair<std::string, Scalar>;

// [a, b] = sum of terms; the opposite order is filled in by antisymmetry.
struct BracketRule {
  std::string a;
  std::string b;
  std::vector<Term> value;
};

// Finite-dimensional algebra given by structure constants
// [e_i, e_j] = sum_k c(i, j, k) e_k. Antisymmetry is enforced on
// construction; the Jacobi identity is checked separately.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> labels);
  LieAlgebra(std::vector<std::string> labels, std::vector<Scalar> constants);

  static LieAlgebra from_brackets(std::vector<std::string> labels, const std::vector<BracketRule>& rules);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(std::string_view label) const;

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
  const std::vector<Scalar>& constants() const { return c_; }

  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& u, const Vector& v) const;
  Vector vector(const std::vector<Term>& terms) const;

  LieAlgebra relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.labels_ == b.labels_ && a.c_ == b.c_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
};

struct JacobiViolation {
  std::size_t i, j, l;
  Vector value;
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

JacobiReport check_jacobi(const LieAlgebra& g);

// Matrix of ad_u, columns indexed by basis vectors.
Matrix adjoint(const LieAlgebra& g, const Vector& u);

class Subspace {
 public:
  Subspace() = default;
  // Throws std::invalid_argument on dependent or wrongly sized vectors.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  // Coordinates of v in this basis; throws when v is outside.
  Vector coordinates(const Vector& v) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
Subspace center(const LieAlgebra& g);
Subspace derived_algebra(const LieAlgebra& g);
bool is_derivation(const LieAlgebra& g, const Matrix& d);
// map has one column per basis vector of `from`, holding its image in `to`.
bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& map);
// Structure constants of a closed subspace in its own basis.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s, std::vector<std::string> labels);

}  // namespace bicross
