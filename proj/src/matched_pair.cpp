#include "bicross/matched_pair.hpp"

#include <stdexcept>

namespace bicross {

namespace {

struct Splitting {
  Matrix to_combined;  // ambient coordinates -> (g1 coords, g2 coords)
  std::size_t n1;
  std::size_t n2;

  std::pair<Vector, Vector> split(const Vector& v) const {
    Vector c = to_combined * v;
    return {Vector(c.begin(), c.begin() + n1), Vector(c.begin() + n1, c.end())};
  }
};

Splitting make_splitting(const MatchedPair& mp) {
  std::size_t n = mp.g.dim();
  if (mp.g1.ambient_dim() != n || mp.g2.ambient_dim() != n)
    throw std::invalid_argument("matched pair: subspace ambient dimension mismatch");
  if (mp.g1.dim() + mp.g2.dim() != n) throw std::invalid_argument("matched pair: dimensions do not add up");
  std::vector<Vector> cols = mp.g1.basis();
  cols.insert(cols.end(), mp.g2.basis().begin(), mp.g2.basis().end());
  Matrix b = Matrix::from_columns(n, cols);
  if (rank(b) != n) throw std::invalid_argument("matched pair: summands are not complementary");
  return {inverse(b), mp.g1.dim(), mp.g2.dim()};
}

Vector embed(const Subspace& s, const Vector& coords) {
  Vector v = zero_vector(s.ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) v = add(v, scaled(coords[i], s.basis()[i]));
  return v;
}

std::vector<std::string> sub_labels(const LieAlgebra& g, const Subspace& s, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector& v = s.basis()[i];
    std::string label = prefix + std::to_string(i + 1);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v == unit_vector(v.size(), k)) label = g.labels()[k];
    labels.push_back(label);
  }
  return labels;
}

}  // namespace

Vector InducedActions::act_left(const Vector& x, const Vector& a) const {
  Vector r = zero_vector(g1.dim());
  for (std::size_t p = 0; p < x.size(); ++p)
    if (x[p] != 0) r = add(r, scaled(x[p], left[p] * a));
  return r;
}

Vector InducedActions::act_right(const Vector& x, const Vector& a) const {
  Vector r = zero_vector(g2.dim());
  for (std::size_t p = 0; p < x.size(); ++p)
    if (x[p] != 0) r = add(r, scaled(x[p], right[p] * a));
  return r;
}

InducedActions induced_actions(const MatchedPair& mp) {
  Splitting sp = make_splitting(mp);
  if (!is_subalgebra(mp.g, mp.g1) || !is_subalgebra(mp.g, mp.g2))
    throw std::invalid_argument("matched pair: summand not closed under the bracket");
  InducedActions out;
  out.g1 = restrict_to(mp.g, mp.g1, sub_labels(mp.g, mp.g1, "a"));
  out.g2 = restrict_to(mp.g, mp.g2, sub_labels(mp.g, mp.g2, "x"));
  for (std::size_t p = 0; p < sp.n2; ++p) {
    std::vector<Vector> lcols, rcols;
    for (std::size_t q = 0; q < sp.n1; ++q) {
      auto [a_part, x_part] = sp.split(mp.g.bracket(mp.g2.basis()[p], mp.g1.basis()[q]));
      lcols.push_back(a_part);
      rcols.push_back(x_part);
    }
    out.left.push_back(Matrix::from_columns(sp.n1, lcols));
    out.right.push_back(Matrix::from_columns(sp.n2, rcols));
  }
  return out;
}

CheckReport check_matched_pair(const MatchedPair& mp) {
  CheckReport r;
  std::size_t n = mp.g.dim();
  r.require(check_jacobi(mp.g).ok(), "jacobi");
  r.require(mp.g1.dim() + mp.g2.dim() == n, "dimension");
  std::vector<Vector> all = mp.g1.basis();
  all.insert(all.end(), mp.g2.basis().begin(), mp.g2.basis().end());
  r.require(rank_of(all, n) == n, "direct_sum");
  r.require(is_subalgebra(mp.g, mp.g1), "g1_subalgebra");
  r.require(is_subalgebra(mp.g, mp.g2), "g2_subalgebra");
  if (!r.ok()) return r;

  InducedActions act = induced_actions(mp);
  std::size_t n1 = mp.g1.dim(), n2 = mp.g2.dim();
  const LieAlgebra& g1 = act.g1;
  const LieAlgebra& g2 = act.g2;

  for (std::size_t p = 0; p < n2; ++p)
    for (std::size_t q = 0; q < n2; ++q)
      for (std::size_t i = 0; i < n1; ++i) {
        Vector x = unit_vector(n2, p), y = unit_vector(n2, q), a = unit_vector(n1, i);
        Vector lhs = act.act_left(g2.bracket(x, y), a);
        Vector rhs = sub(act.act_left(x, act.act_left(y, a)), act.act_left(y, act.act_left(x, a)));
        r.require(lhs == rhs, "left_module");
        Vector lhs2 = act.act_right(g2.bracket(x, y), a);
        Vector rhs2 = add(add(g2.bracket(x, act.act_right(y, a)), g2.bracket(act.act_right(x, a), y)),
                          sub(act.act_right(x, act.act_left(y, a)), act.act_right(y, act.act_left(x, a))));
        r.require(lhs2 == rhs2, "compatibility_2");
      }
  for (std::size_t p = 0; p < n2; ++p)
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        Vector x = unit_vector(n2, p), a = unit_vector(n1, i), b = unit_vector(n1, j);
        Vector lhs = act.act_right(x, g1.bracket(a, b));
        Vector rhs = sub(act.act_right(act.act_right(x, a), b), act.act_right(act.act_right(x, b), a));
        r.require(lhs == rhs, "right_module");
        Vector lhs1 = act.act_left(x, g1.bracket(a, b));
        Vector rhs1 = add(add(g1.bracket(act.act_left(x, a), b), g1.bracket(a, act.act_left(x, b))),
                          sub(act.act_left(act.act_right(x, a), b), act.act_left(act.act_right(x, b), a)));
        r.require(lhs1 == rhs1, "compatibility_1");
      }
  // [a+x, b+y] = ([a,b] + x|>b - y|>a) + ([x,y] + x<|b - y<|a)
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Vector a = zero_vector(n1), x = zero_vector(n2), b = zero_vector(n1), y = zero_vector(n2);
      (u < n1 ? a[u] : x[u - n1]) = 1;
      (v < n1 ? b[v] : y[v - n1]) = 1;
      Vector p1 = add(g1.bracket(a, b), sub(act.act_left(x, b), act.act_left(y, a)));
      Vector p2 = add(g2.bracket(x, y), sub(act.act_right(x, b), act.act_right(y, a)));
      Vector whole = mp.g.bracket(add(embed(mp.g1, a), embed(mp.g2, x)), add(embed(mp.g1, b), embed(mp.g2, y)));
      r.require(whole == add(embed(mp.g1, p1), embed(mp.g2, p2)), "reconstruction");
    }
  // Deduplicate repeated clause names while keeping first-seen order.
  std::vector<std::string> unique;
  for (auto& f : r.failures) {
    bool seen = false;
    for (auto& u : unique) seen = seen || u == f;
    if (!seen) unique.push_back(f);
  }
  r.failures = unique;
  return r;
}

TwoCocycle zero_cocycle(std::size_t n) { return {Matrix(n, n)}; }

TwoCocycle elementary_cocycle(std::size_t n, std::size_t i, std::size_t j, const Scalar& value) {
  if (i == j) throw std::invalid_argument("elementary cocycle needs distinct indices");
  TwoCocycle u = zero_cocycle(n);
  u.form(i, j) = value;
  u.form(j, i) = -value;
  return u;
}

CheckReport check_nplus1(const NPlus1Data& data) {
  CheckReport r;
  std::size_t n = data.g1.dim();
  if (data.chi.size() != n || data.beta.rows() != n || data.beta.cols() != n) {
    r.require(false, "shape");
    return r;
  }
  r.require(check_jacobi(data.g1).ok(), "g1_jacobi");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector x = unit_vector(n, i), y = unit_vector(n, j);
      Vector xy = data.g1.bracket(x, y);
      r.require(data.chi_of(xy) == 0, "chi_kills_brackets");
      Vector bx = data.beta_of(x), by = data.beta_of(y);
      Vector rhs = add(add(data.g1.bracket(x, by), data.g1.bracket(bx, y)),
                       sub(scaled(data.chi_of(y), bx), scaled(data.chi_of(x), by)));
      r.require(data.beta_of(xy) == rhs, "beta_identity");
    }
  Matrix chi_row = Matrix::from_rows(n, {data.chi});
  Vector cb = (chi_row * data.beta).row(0);
  Vector cbb = (chi_row * data.beta * data.beta).row(0);
  r.require(rank_of({data.chi, cb, cbb}, n) < 3, "chi_powers_dependent");
  return r;
}

NPlus1Data extract_chi_beta(const MatchedPair& mp) {
  if (mp.g2.dim() != 1) throw std::invalid_argument("extract_chi_beta: dim g2 must be 1");
  Splitting sp = make_splitting(mp);
  NPlus1Data d;
  d.g1 = restrict_to(mp.g, mp.g1, sub_labels(mp.g, mp.g1, "a"));
  d.generator = sub_labels(mp.g, mp.g2, "A").front();
  if (d.generator == "A1") d.generator = "A";
  std::size_t n1 = mp.g1.dim();
  d.chi = zero_vector(n1);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n1; ++i) {
    auto [b_part, a_part] = sp.split(mp.g.bracket(mp.g1.basis()[i], mp.g2.basis()[0]));
    cols.push_back(b_part);
    d.chi[i] = a_part[0];
  }
  d.beta = Matrix::from_columns(n1, cols);
  return d;
}

LieAlgebra build_ambient(const NPlus1Data& data) {
  std::size_t n = data.g1.dim();
  std::vector<std::string> labels = data.g1.labels();
  labels.push_back(data.generator);
  std::size_t m = n + 1;
  std::vector<Scalar> c(m * m * m, Scalar(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * m + j) * m + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = data.g1.constant(i, j, k);
  for (std::size_t i = 0; i < n; ++i) {
    Vector b = data.beta.column(i);
    for (std::size_t k = 0; k < n; ++k) {
      at(i, n, k) = b[k];
      at(n, i, k) = -b[k];
    }
    at(i, n, n) = data.chi[i];
    at(n, i, n) = -data.chi[i];
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

MatchedPair ambient_pair(const NPlus1Data& data) {
  std::size_t n = data.g1.dim();
  std::vector<Vector> b1;
  for (std::size_t i = 0; i < n; ++i) b1.push_back(unit_vector(n + 1, i));
  return {build_ambient(data), Subspace(n + 1, b1), Subspace(n + 1, {unit_vector(n + 1, n)})};
}

std::string tilde(const std::string& label) {
  if (!label.empty() && label.front() == '~') return label.substr(1);
  return "~" + label;
}

LieAlgebra build_extension(const NPlus1Data& data, const TwoCocycle& u) {
  std::size_t n = data.g1.dim();
  if (u.form.rows() != n || u.form.cols() != n) throw std::invalid_argument("build_extension: cocycle shape");
  if (!(u.form.transpose() == Scalar(-1) * u.form)) throw std::invalid_argument("build_extension: form not antisymmetric");
  std::vector<std::string> labels = data.g1.labels();
  labels.push_back(tilde(data.generator));
  std::size_t m = n + 1;
  std::vector<Scalar> c(m * m * m, Scalar(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * m + j) * m + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = data.g1.constant(i, j, k);
      at(i, j, n) = u.form(i, j);
    }
  for (std::size_t i = 0; i < n; ++i) {
    at(n, i, n) = data.chi[i];
    at(i, n, n) = -data.chi[i];
  }
  LieAlgebra g(std::move(labels), std::move(c));
  if (!check_jacobi(g).ok()) throw std::invalid_argument("build_extension: Jacobi fails (form is not a cocycle)");
  return g;
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Case1: return "case1";
    case Trichotomy::Case2: return "case2";
    case Trichotomy::Case3: return "case3";
  }
  return "?";
}

Trichotomy trichotomy(const NPlus1Data& data) {
  std::size_t n = data.g1.dim();
  if (is_zero(data.chi)) return Trichotomy::Case1;
  Matrix chi_row = Matrix::from_rows(n, {data.chi});
  std::vector<Vector> ker = nullspace(chi_row);
  bool invariant = true;
  for (const auto& v : ker) invariant = invariant && data.chi_of(data.beta_of(v)) == 0;
  if (invariant) return Trichotomy::Case2;
  Vector cb = (chi_row * data.beta).row(0);
  if (rank_of({data.chi, cb}, n) == 2) {
    Matrix both = Matrix::from_rows(n, {data.chi, cb});
    bool ok = true;
    for (const auto& v : nullspace(both)) ok = ok && (both * data.beta_of(v)) == zero_vector(2);
    if (ok) return Trichotomy::Case3;
  }
  throw std::domain_error("trichotomy: data fits none of the three cases");
}

bool verify_isomorphism(const NPlus1Data& a, const NPlus1Data& b, const Matrix& t, const Scalar& s) {
  std::size_t n = a.g1.dim();
  if (b.g1.dim() != n || t.rows() != n || t.cols() != n) throw std::invalid_argument("verify_isomorphism: shape");
  if (determinant(t) == 0) throw std::invalid_argument("verify_isomorphism: singular map");
  if (s == 0) throw std::invalid_argument("verify_isomorphism: zero scaling");
  if (!is_homomorphism(a.g1, b.g1, t)) return false;
  Matrix chi_b = Matrix::from_rows(n, {b.chi});
  if ((chi_b * t).row(0) != a.chi) return false;
  return t * a.beta == s * (b.beta * t);
}

NPlus1Data image_data(const NPlus1Data& a, const Matrix& t, const Scalar& s) {
  std::size_t n = a.g1.dim();
  if (t.rows() != n || t.cols() != n) throw std::invalid_argument("image_data: shape");
  if (s == 0) throw std::invalid_argument("image_data: zero scaling");
  Matrix ti = inverse(t);
  std::vector<Scalar> c(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = t * a.g1.bracket(ti.column(i), ti.column(j));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
    }
  NPlus1Data b;
  b.g1 = LieAlgebra(a.g1.labels(), std::move(c));
  b.chi = (Matrix::from_rows(n, {a.chi}) * ti).row(0);
  b.beta = (1 / s) * (t * a.beta * ti);
  b.generator = a.generator;
  return b;
}

bool check_power_identity(const NPlus1Data& data, unsigned n) {
  std::size_t m = data.g1.dim();
  Matrix p = Matrix::identity(m);
  for (unsigned k = 0; k < n; ++k) p = data.beta * p;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector x = unit_vector(m, i), y = unit_vector(m, j);
      Scalar lhs = data.chi_of(p * data.g1.bracket(x, y));
      Scalar rhs = Scalar(n) * (data.chi_of(p * x) * data.chi_of(y) - data.chi_of(p * y) * data.chi_of(x));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace bicross
