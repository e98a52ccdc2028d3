#pragma once

#include <string>
#include <vector>

#include "bicross/check_report.hpp"
#include "bicross/lie_algebra.hpp"

namespace bicross {

// g = g1 + g2 as vector spaces, both summands subalgebras.
struct MatchedPair {
  LieAlgebra g;
  Subspace g1;
  Subspace g2;
};

// For x in g2 and a in g1, [x, a] splits as (x |> a) + (x <| a).
// left[p] is the matrix of a -> e_p |> a in g1 coordinates; right[p] is
// a -> e_p <| a with values in g2 coordinates.
struct InducedActions {
  LieAlgebra g1;
  LieAlgebra g2;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  Vector act_left(const Vector& x, const Vector& a) const;
  Vector act_right(const Vector& x, const Vector& a) const;
};

// Throws std::invalid_argument when g1 + g2 is not a direct sum or a
// summand is not closed under the bracket.
InducedActions induced_actions(const MatchedPair& mp);
CheckReport check_matched_pair(const MatchedPair& mp);

// Dimension n+1 data: [X, A] = beta(X) + chi(X) A for X in g1.
// beta is stored column-wise: column j holds beta(e_j).
struct NPlus1Data {
  LieAlgebra g1;
  Vector chi;
  Matrix beta;
  std::string generator = "A";

  Scalar chi_of(const Vector& x) const { return dot(chi, x); }
  Vector beta_of(const Vector& x) const { return beta * x; }
};

// Scalar-valued antisymmetric form on g1 (coefficient of the extending
// generator).
struct TwoCocycle {
  Matrix form;

  Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, form * y); }
  friend bool operator==(const TwoCocycle& a, const TwoCocycle& b) { return a.form == b.form; }
};

TwoCocycle zero_cocycle(std::size_t n);
// Form with U(e_i, e_j) = value, U(e_j, e_i) = -value.
TwoCocycle elementary_cocycle(std::size_t n, std::size_t i, std::size_t j, const Scalar& value);

// The defining identities on chi and beta plus the rank condition on
// chi, chi.beta, chi.beta^2.
CheckReport check_nplus1(const NPlus1Data& data);

// Requires dim g2 = 1; its basis vector is the generator A.
NPlus1Data extract_chi_beta(const MatchedPair& mp);

// g1 + kA with [X, A] = beta(X) + chi(X) A.
LieAlgebra build_ambient(const NPlus1Data& data);
MatchedPair ambient_pair(const NPlus1Data& data);

std::string tilde(const std::string& label);

// g1 + k~A with [~A, X] = chi(X) ~A and [X, Y] = [X, Y]_1 + U(X, Y) ~A.
// Throws std::invalid_argument if the result fails the Jacobi identity.
LieAlgebra build_extension(const NPlus1Data& data, const TwoCocycle& u);

enum class Trichotomy { Case1, Case2, Case3 };
std::string to_string(Trichotomy t);

// Throws std::domain_error when none of the three branches applies.
Trichotomy trichotomy(const NPlus1Data& data);

// Phi(X) = T X on g1 (catalog side a to side b) and Phi(A_a) = s A_b.
// Holds iff T is a Lie isomorphism, chi_a = chi_b T and T beta_a = s beta_b T.
bool verify_isomorphism(const NPlus1Data& a, const NPlus1Data& b, const Matrix& t, const Scalar& s);

// The data b with verify_isomorphism(a, b, t, s): brackets T[T^-1 x, T^-1 y],
// chi_a T^-1 and s^-1 T beta_a T^-1. Labels are kept.
NPlus1Data image_data(const NPlus1Data& a, const Matrix& t, const Scalar& s);

// chi(beta^n [X,Y]) = n (chi(beta^n X) chi(Y) - chi(beta^n Y) chi(X)).
bool check_power_identity(const NPlus1Data& data, unsigned n);

}  // namespace bicross
