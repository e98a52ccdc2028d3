#include "bicross/bialgebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bicross/cohomology.hpp"

namespace bicross {

namespace {

std::string idx(std::initializer_list<std::size_t> ids) {
  std::string s = "(";
  bool first = true;
  for (auto i : ids) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

LieBialgebra::LieBialgebra(LieAlgebra algebra, std::vector<Scalar> cobracket, Params params)
    : algebra_(std::move(algebra)), cob_(std::move(cobracket)), params_(std::move(params)) {
  std::size_t n = algebra_.dim();
  if (cob_.size() != n * n * n) throw std::invalid_argument("cobracket: expected dim^3 entries");
}

LieBialgebra LieBialgebra::from_rules(LieAlgebra algebra, const std::vector<CobracketRule>& rules, Params params) {
  std::size_t n = algebra.dim();
  std::vector<Scalar> cob(n * n * n, Scalar(0));
  for (const auto& rule : rules) {
    std::size_t i = algebra.index_of(rule.element);
    for (const auto& t : rule.value) {
      std::size_t j = algebra.index_of(t.left), k = algebra.index_of(t.right);
      if (j == k) continue;
      cob[(i * n + j) * n + k] += t.coef;
      cob[(i * n + k) * n + j] -= t.coef;
    }
  }
  return LieBialgebra(std::move(algebra), std::move(cob), std::move(params));
}

Matrix LieBialgebra::delta(const Vector& u) const {
  std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j, k) += u[i] * cob(i, j, k);
  }
  return m;
}

bool LieBialgebra::same_structure(const LieBialgebra& other) const {
  return algebra_.constants() == other.algebra_.constants() && cob_ == other.cob_;
}

CheckReport check_bialgebra(const LieBialgebra& b) {
  CheckReport r;
  std::size_t n = b.dim();
  for (const auto& v : check_jacobi(b.algebra()).violations) r.require(false, "jacobi" + idx({v.i, v.j, v.l}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        r.require(b.cob(i, j, k) == -b.cob(i, k, j), "coantisymmetry" + idx({i, j, k}));
  // (iota (x) delta) delta, cyclically summed over the three tensor slots.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> t(n * n * n, Scalar(0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k) {
        if (b.cob(i, a, k) == 0) continue;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) t[(a * n + p) * n + q] += b.cob(i, a, k) * b.cob(k, p, q);
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Scalar s = t[(a * n + p) * n + q] + t[(q * n + a) * n + p] + t[(p * n + q) * n + a];
          r.require(s == 0, "co_jacobi" + idx({i, a, p, q}));
        }
  }
  // delta[u,v] = ad_u delta(v) - ad_v delta(u) with ad acting on both slots.
  const LieAlgebra& g = b.algebra();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs = b.delta(g.basis_bracket(i, j));
      Matrix di = b.delta(unit_vector(n, i)), dj = b.delta(unit_vector(n, j));
      Matrix adi = adjoint(g, unit_vector(n, i)), adj = adjoint(g, unit_vector(n, j));
      Matrix rhs = (adi * dj + dj * adi.transpose()) - (adj * di + di * adj.transpose());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) r.require(lhs(a, c) == rhs(a, c), "compatibility" + idx({i, j, a, c}));
    }
  return r;
}

LieBialgebra bicrossed_product(const NPlus1Data& data, const TwoCocycle& u, const Scalar& lambda) {
  TwoCocycle lu{lambda * u.form};
  if (!is_cocycle(data, lu)) throw std::invalid_argument("bicrossed_product: lambda U is not a cocycle");
  LieAlgebra alg = build_extension(data, lu);
  std::size_t n = data.g1.dim(), m = n + 1;
  std::vector<Scalar> cob(m * m * m, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& c = data.beta(k, i);
      cob[(i * m + k) * m + n] += c;
      cob[(i * m + n) * m + k] -= c;
    }
  return LieBialgebra(std::move(alg), std::move(cob));
}

LieBialgebra dual(const LieBialgebra& b) {
  std::size_t n = b.dim();
  std::vector<std::string> labels;
  for (const auto& l : b.labels()) labels.push_back(tilde(l));
  std::vector<Scalar> c(n * n * n), cob(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        c[(j * n + k) * n + i] = b.cob(i, j, k);
        cob[(k * n + i) * n + j] = b.algebra().constant(i, j, k);
      }
  return LieBialgebra(LieAlgebra(std::move(labels), std::move(c)), std::move(cob), b.params());
}

CheckReport pairing_check(const LieBialgebra& b, const LieBialgebra& d, const Matrix& p) {
  std::size_t n = b.dim();
  if (d.dim() != n || p.rows() != n || p.cols() != n) throw std::invalid_argument("pairing_check: shape mismatch");
  if (determinant(p) == 0) throw std::invalid_argument("pairing_check: degenerate pairing");
  CheckReport r;
  const LieAlgebra& g = b.algebra();
  const LieAlgebra& h = d.algebra();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t x = 0; x < n; ++x) {
        Scalar lhs = 0, rhs = 0;
        for (std::size_t i = 0; i < n; ++i) lhs += h.constant(a, c, i) * p(i, x);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) rhs += b.cob(x, j, k) * p(a, j) * p(c, k);
        r.require(lhs == rhs, "bracket_vs_cobracket" + idx({a, c, x}));
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Scalar lhs = 0, rhs = 0;
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t) lhs += d.cob(a, s, t) * p(s, x) * p(t, y);
        for (std::size_t k = 0; k < n; ++k) rhs += g.constant(x, y, k) * p(a, k);
        r.require(lhs == rhs, "cobracket_vs_bracket" + idx({a, x, y}));
      }
  return r;
}

bool is_bialgebra_morphism(const LieBialgebra& from, const LieBialgebra& to, const Matrix& t) {
  if (!is_homomorphism(from.algebra(), to.algebra(), t)) return false;
  std::size_t n = from.dim(), m = to.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lhs = t * from.delta(unit_vector(n, i)) * t.transpose();
    if (!(lhs == to.delta(t.column(i)))) return false;
  }
  (void)m;
  return true;
}

std::vector<Scalar> default_scales() {
  std::vector<Scalar> s;
  for (int v : {1, 2, 3, 4})
    for (int sign : {1, -1}) {
      s.push_back(Scalar(sign * v));
      if (v != 1) s.push_back(ratio(sign, v));
    }
  return s;
}

std::optional<Matrix> find_isomorphism(const LieBialgebra& from, const LieBialgebra& to, const std::vector<Scalar>& scales) {
  std::size_t n = from.dim();
  if (to.dim() != n || scales.empty()) return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> choice(n, 0);
    while (true) {
      Matrix t(n, n);
      for (std::size_t i = 0; i < n; ++i) t(perm[i], i) = scales[choice[i]];
      if (is_bialgebra_morphism(from, to, t)) return t;
      std::size_t pos = 0;
      while (pos < n && ++choice[pos] == scales.size()) choice[pos++] = 0;
      if (pos == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

DualityOutcome match_dual(const LieBialgebra& primal, const LieBialgebra& listed, const std::vector<Scalar>& extra) {
  DualityOutcome out;
  out.canonical = pairing_check(primal, listed, Matrix::identity(primal.dim())).ok();
  if (out.canonical) return out;
  std::vector<Scalar> scales = default_scales();
  for (const auto& e : extra)
    if (e != 0) {
      scales.push_back(e);
      scales.push_back(-e);
      scales.push_back(1 / e);
      scales.push_back(-1 / e);
    }
  out.isomorphism = find_isomorphism(dual(primal), listed, scales);
  return out;
}

}  // namespace bicross
