#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicross/check_report.hpp"
#include "bicross/entry_name.hpp"
#include "bicross/lie_algebra.hpp"
#include "bicross/matched_pair.hpp"

namespace bicross {

// coef * (left ^ right) with u ^ v = u (x) v - v (x) u.
struct WedgeTerm {
  Scalar coef;
  std::string left;
  std::string right;
};

struct CobracketRule {
  std::string element;
  std::vector<WedgeTerm> value;
};

// Lie algebra plus cobracket delta(e_i) = sum_{j,k} cob(i, j, k) e_j (x) e_k,
// stored as a full tensor antisymmetric in (j, k).
class LieBialgebra {
 public:
  LieBialgebra() = default;
  LieBialgebra(LieAlgebra algebra, std::vector<Scalar> cobracket, Params params = {});

  static LieBialgebra from_rules(LieAlgebra algebra, const std::vector<CobracketRule>& rules, Params params = {});

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<std::string>& labels() const { return algebra_.labels(); }
  const Scalar& cob(std::size_t i, std::size_t j, std::size_t k) const { return cob_[(i * dim() + j) * dim() + k]; }
  const std::vector<Scalar>& cobracket() const { return cob_; }
  const Params& params() const { return params_; }

  // delta(u) as an n x n coefficient matrix of e_j (x) e_k.
  Matrix delta(const Vector& u) const;

  // Same constants, ignoring labels and parameters.
  bool same_structure(const LieBialgebra& other) const;
  friend bool operator==(const LieBialgebra& a, const LieBialgebra& b) {
    return a.algebra_ == b.algebra_ && a.cob_ == b.cob_;
  }

 private:
  LieAlgebra algebra_;
  std::vector<Scalar> cob_;
  Params params_;
};

CheckReport check_bialgebra(const LieBialgebra& b);

// [~A, X] = chi(X) ~A, [X,Y] = [X,Y]_1 + lambda U(X,Y) ~A, delta(~A) = 0,
// delta(X) = beta(X) ^ ~A. Throws std::invalid_argument if lambda U is not
// a cocycle.
LieBialgebra bicrossed_product(const NPlus1Data& data, const TwoCocycle& u, const Scalar& lambda);

// Bracket of the dual is the transposed cobracket and vice versa; labels
// toggle a leading '~'.
LieBialgebra dual(const LieBialgebra& b);

// p(i, j) = <f_i, e_j> for f_i a basis of `dual_side`, e_j of `b`. Checks
// <[f,g], x> = <f (x) g, delta(x)> and <delta(f), x (x) y> = <f, [x,y]>.
// Throws std::invalid_argument for a degenerate pairing.
CheckReport pairing_check(const LieBialgebra& b, const LieBialgebra& dual_side, const Matrix& p);

// t has one column per basis vector of `from`.
bool is_bialgebra_morphism(const LieBialgebra& from, const LieBialgebra& to, const Matrix& t);

// Searches maps e_i -> c_i e_{perm(i)} with coefficients from `scales`.
std::optional<Matrix> find_isomorphism(const LieBialgebra& from, const LieBialgebra& to, const std::vector<Scalar>& scales);
std::vector<Scalar> default_scales();

struct DualityOutcome {
  bool canonical = false;          // pairing_check passed with the identity pairing
  std::optional<Matrix> isomorphism;  // dual(primal) -> listed, when not canonical
  bool ok() const { return canonical || isomorphism.has_value(); }
};

// Compares a listed dual presentation with the computed dual: first under
// the canonical pairing, then by basis search.
DualityOutcome match_dual(const LieBialgebra& primal, const LieBialgebra& listed_dual,
                          const std::vector<Scalar>& extra_scales = {});

}  // namespace bicross
