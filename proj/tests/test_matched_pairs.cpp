#include <gtest/gtest.h>

#include <functional>

#include "bicross/bialgebra_catalog.hpp"
#include "bicross/catalog.hpp"
#include "bicross/matched_pair.hpp"
#include "support.hpp"

using namespace bicross;
using bicross::testing::Rng;

namespace {

Matrix cols2(Vector x, Vector y) { return Matrix::from_columns(2, {std::move(x), std::move(y)}); }

NPlus1Data group_data(const std::string& name) { return *bialgebra_entry(name).data; }

// The unnormalized case 4.3 family: [X,Y]=-Y, chi(X)=1, beta(X)=aY, beta(Y)=X.
NPlus1Data case43(const Scalar& a) {
  NPlus1Data d;
  d.g1 = LieAlgebra::from_brackets({"X", "Y"}, {{"X", "Y", {{"Y", -1}}}});
  d.chi = {1, 0};
  d.beta = cols2({0, a}, {1, 0});
  return d;
}

struct QuotedMap {
  NPlus1Data catalog_side;
  NPlus1Data derived_side;
  Matrix t;
  Scalar s;
};

std::vector<QuotedMap> quoted_maps() {
  Scalar d(-1);
  return {
      {catalog_entry("2+1/4.1?d=-1&b=0").data, group_data("bialg/4.1?d=-1&b=0&lambda=1"), cols2({1, 0}, {0, d}), -1},
      {case43(4), group_data("bialg/4.3+"), cols2({-1, ratio(-1, 2)}, {0, ratio(-1, 4)}), 2},
      {case43(-4), group_data("bialg/4.3-"), cols2({-1, 0}, {0, ratio(1, 2)}), -2},
      {case43(0), group_data("bialg/4.3=0"), cols2({ratio(-1, 2), 0}, {0, ratio(-1, 2)}), 1},
      {catalog_entry("2+1/4.2?d=3").data, group_data("bialg/4.2?d=3&lambda=0"), Matrix::identity(2), 1},
  };
}

}  // namespace

TEST(Catalog, FifteenEntriesAllPass) {
  auto entries = catalog();
  ASSERT_EQ(entries.size(), 15u);
  for (const auto& e : entries) {
    SCOPED_TRACE(e.full_name());
    EXPECT_TRUE(check_jacobi(e.data.g1).ok());
    EXPECT_TRUE(check_nplus1(e.data).ok());
    auto r = check_matched_pair(ambient_pair(e.data));
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front());
  }
}

TEST(Catalog, Case21WithROneHasIdentityBeta) {
  EXPECT_EQ(catalog_entry("2+1/2.1?r=1").data.beta, Matrix::identity(2));
}

TEST(Catalog, ParameterRanges) {
  EXPECT_THROW(catalog_entry("2+1/2.1?r=2"), std::invalid_argument);
  EXPECT_NO_THROW(catalog_entry("2+1/2.1?r=2", CatalogOptions{true}));
  EXPECT_THROW(catalog_entry("2+1/4.1?d=2&b=1"), std::invalid_argument);
  EXPECT_NO_THROW(catalog_entry("2+1/4.1?d=1&b=1"));
  EXPECT_THROW(catalog_entry("2+1/4.3?a=2"), std::invalid_argument);
  EXPECT_THROW(catalog_entry("2+1/4.2?q=1"), std::invalid_argument);
  EXPECT_THROW(catalog_entry("2+1/9.9"), std::invalid_argument);
}

TEST(Catalog, Defaults) {
  auto e = catalog_entry("2+1/4.1");
  EXPECT_EQ(e.params.at("d"), -1);
  EXPECT_EQ(e.params.at("b"), 0);
  EXPECT_EQ(catalog_entry("2+1/4.1?d=1").params.at("b"), 1);
  EXPECT_EQ(catalog_entry("2+1/2.1").params.at("r"), ratio(1, 2));
  EXPECT_EQ(catalog_entry("2+1/3").params.at("a"), -1);
  EXPECT_EQ(catalog_entry("2+1/4.1?d=-1&b=0").full_name(), "2+1/4.1?b=0&d=-1");
}

TEST(EntryNames, ParseAndFormat) {
  EntryName n = parse_entry_name("2+1/4.1?d=-1&b=0");
  EXPECT_EQ(n.base, "2+1/4.1");
  EXPECT_EQ(n.params.at("d"), "-1");
  EXPECT_THROW(parse_entry_name("2+1/4.1?d=1&d=2"), std::invalid_argument);
  EXPECT_THROW(parse_entry_name("2+1/4.1?d"), std::invalid_argument);
  EXPECT_EQ(format_entry_name("x", {}), "x");
}

TEST(InducedActions, TrivialCaseHasZeroActions) {
  auto acts = induced_actions(ambient_pair(catalog_entry("2+1/1.1").data));
  for (const auto& m : acts.left) EXPECT_TRUE(m.is_zero());
  for (const auto& m : acts.right) EXPECT_TRUE(m.is_zero());
}

TEST(InducedActions, OnePlusOneWithUnitCharacter) {
  // [X,A] = A, so [A,X] = -A: no g1-part, right action -A.
  auto acts = induced_actions(ambient_pair(catalog_entry("1+1/3").data));
  EXPECT_EQ(acts.act_left({1}, {1}), Vector{0});
  EXPECT_EQ(acts.act_right({1}, {1}), Vector{-1});
}

TEST(InducedActions, DirectSumOfIdealsHasZeroActions) {
  LieAlgebra g = LieAlgebra::from_brackets({"X", "Y", "A"}, {{"X", "Y", {{"Y", 1}}}});
  MatchedPair mp{g, Subspace(3, {unit_vector(3, 0), unit_vector(3, 1)}), Subspace(3, {unit_vector(3, 2)})};
  auto acts = induced_actions(mp);
  for (const auto& m : acts.left) EXPECT_TRUE(m.is_zero());
  for (const auto& m : acts.right) EXPECT_TRUE(m.is_zero());
  EXPECT_TRUE(check_matched_pair(mp).ok());
}

TEST(InducedActions, OverlappingSummandsThrow) {
  LieAlgebra g({"X", "Y"});
  MatchedPair mp{g, Subspace(2, {unit_vector(2, 0)}), Subspace(2, {unit_vector(2, 0)})};
  EXPECT_THROW(induced_actions(mp), std::invalid_argument);
  EXPECT_FALSE(check_matched_pair(mp).ok());
}

TEST(CheckMatchedPair, Su2SplitFails) {
  LieAlgebra g = LieAlgebra::from_brackets(
      {"X", "Y", "Z"}, {{"X", "Y", {{"Z", 1}}}, {"Y", "Z", {{"X", 1}}}, {"Z", "X", {{"Y", 1}}}});
  EXPECT_FALSE(check_matched_pair({g, Subspace(3, {unit_vector(3, 0)}), Subspace(3, {unit_vector(3, 1)})}).ok());
  // with g1 = span(X, Y) the split is complementary but g1 is not closed
  auto r = check_matched_pair(
      {g, Subspace(3, {unit_vector(3, 0), unit_vector(3, 1)}), Subspace(3, {unit_vector(3, 2)})});
  EXPECT_FALSE(r.ok());
}

TEST(CheckMatchedPair, AbelianAnySplitPasses) {
  LieAlgebra g({"X", "Y", "Z"});
  EXPECT_TRUE(check_matched_pair({g, Subspace(3, {{1, 1, 0}, {0, 1, 1}}), Subspace(3, {{1, 0, 0}})}).ok());
}

TEST(ExtractChiBeta, CatalogExamples) {
  auto d = extract_chi_beta(ambient_pair(catalog_entry("1+1/4").data));
  EXPECT_EQ(d.chi, Vector{1});
  EXPECT_EQ(d.beta, Matrix::identity(1));
  auto c3 = extract_chi_beta(ambient_pair(catalog_entry("2+1/3?a=5").data));
  EXPECT_EQ(c3.chi, (Vector{1, 0}));
  EXPECT_TRUE(c3.beta.is_zero());
  auto triv = extract_chi_beta(ambient_pair(catalog_entry("2+1/1.2").data));
  EXPECT_TRUE(is_zero(triv.chi));
  EXPECT_TRUE(triv.beta.is_zero());
}

TEST(ExtractChiBeta, RejectsLargerComplement) {
  LieAlgebra g({"X", "Y", "Z"});
  MatchedPair mp{g, Subspace(3, {unit_vector(3, 0)}), Subspace(3, {unit_vector(3, 1), unit_vector(3, 2)})};
  EXPECT_THROW(extract_chi_beta(mp), std::invalid_argument);
}

TEST(ExtractChiBeta, RoundTripsOnRandomData) {
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    auto d = bicross::testing::random_nplus1(rng);
    LieAlgebra amb = build_ambient(d);
    EXPECT_TRUE(check_jacobi(amb).ok());
    EXPECT_TRUE(check_matched_pair(ambient_pair(d)).ok());
    auto back = extract_chi_beta(ambient_pair(d));
    EXPECT_EQ(back.chi, d.chi);
    EXPECT_EQ(back.beta, d.beta);
    EXPECT_EQ(back.g1.constants(), d.g1.constants());
  }
}

TEST(BuildExtension, Case43ZeroWithLambda) {
  auto d = group_data("bialg/4.3=0");
  for (Scalar l : {Scalar(0), Scalar(1), ratio(-7, 3)}) {
    LieAlgebra g = build_extension(d, elementary_cocycle(2, 0, 1, -l));
    EXPECT_TRUE(check_jacobi(g).ok());
    EXPECT_EQ(g.bracket(g.vector({{"~A", 1}}), g.vector({{"X", 1}})), g.vector({{"~A", -2}}));
    EXPECT_EQ(g.bracket(g.vector({{"X", 1}}), g.vector({{"Y", 1}})), g.vector({{"Y", 2}, {"~A", -l}}));
    EXPECT_TRUE(is_zero(g.bracket(g.vector({{"~A", 1}}), g.vector({{"Y", 1}}))));
  }
}

TEST(BuildExtension, TrivialDataGivesAbelian) {
  auto d = catalog_entry("2+1/1.1").data;
  LieAlgebra g = build_extension(d, zero_cocycle(2));
  for (const auto& c : g.constants()) EXPECT_EQ(c, 0);
}

TEST(BuildExtension, Case41WithUnitLambda) {
  auto d = catalog_entry("2+1/4.1?d=-1").data;
  EXPECT_TRUE(check_jacobi(build_extension(d, elementary_cocycle(2, 0, 1, 1))).ok());
}

TEST(Trichotomy, CatalogBranches) {
  for (const auto& e : catalog()) {
    Trichotomy t = trichotomy(e.data);
    const std::string& n = e.name;
    if (n.rfind("2+1/1.", 0) == 0 || n.rfind("2+1/2.", 0) == 0 || n == "1+1/1" || n == "1+1/2")
      EXPECT_EQ(t, Trichotomy::Case1) << n;
    else if (n == "2+1/4.3")
      EXPECT_EQ(t, Trichotomy::Case3) << n;
    else
      EXPECT_EQ(t, Trichotomy::Case2) << n;
  }
  for (int a : {1, 0, -1}) EXPECT_EQ(trichotomy(case43(a)), Trichotomy::Case3);
}

TEST(Trichotomy, TotalAndExclusiveOnRandomData) {
  Rng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    auto d = bicross::testing::random_nplus1(rng);
    std::size_t n = d.g1.dim();
    // independent predicates
    Vector cb(n, Scalar(0));
    for (std::size_t j = 0; j < n; ++j) cb[j] = d.chi_of(d.beta.column(j));
    bool c1 = is_zero(d.chi);
    bool c2 = !c1 && rank_of({d.chi, cb}, n) == 1;
    bool c3 = false;
    if (!c1 && rank_of({d.chi, cb}, n) == 2) {
      c3 = true;
      for (const auto& v : nullspace(Matrix::from_rows(n, {d.chi, cb}))) {
        Vector bv = d.beta_of(v);
        c3 = c3 && d.chi_of(bv) == 0 && dot(cb, bv) == 0;
      }
    }
    ASSERT_EQ(int(c1) + int(c2) + int(c3), 1);
    Trichotomy got = trichotomy(d);
    EXPECT_EQ(got, c1 ? Trichotomy::Case1 : (c2 ? Trichotomy::Case2 : Trichotomy::Case3));
    EXPECT_TRUE(check_nplus1(d).ok());
  }
}

TEST(Trichotomy, InconsistentDataThrows) {
  // chi and chi.beta independent but beta does not preserve their common kernel.
  NPlus1Data d;
  d.g1 = LieAlgebra({"X", "Y", "Z"});
  d.chi = {1, 0, 0};
  d.beta = Matrix::from_columns(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  // chi.beta = (0, 1, 0); common kernel = span(Z); beta(Z) = Y leaves it
  EXPECT_THROW(trichotomy(d), std::domain_error);
}

TEST(VerifyIsomorphism, QuotedMapsHold) {
  for (const auto& q : quoted_maps()) EXPECT_TRUE(verify_isomorphism(q.catalog_side, q.derived_side, q.t, q.s));
}

TEST(VerifyIsomorphism, NormalizedCase43Maps) {
  EXPECT_TRUE(verify_isomorphism(catalog_entry("2+1/4.3?a=1").data, group_data("bialg/4.3+"),
                                 cols2({-1, ratio(-1, 2)}, {0, ratio(-1, 2)}), 1));
  EXPECT_TRUE(verify_isomorphism(catalog_entry("2+1/4.3?a=-1").data, group_data("bialg/4.3-"),
                                 cols2({-1, 0}, {0, 1}), -1));
}

TEST(VerifyIsomorphism, Case41AcrossParameters) {
  for (auto [d, b] : std::vector<std::pair<Scalar, Scalar>>{{-1, 0}, {1, 1}, {1, -2}, {ratio(2, 3), 0}, {5, 0}}) {
    Params p{{"d", d}, {"b", b}};
    auto cat = make_catalog_entry("2+1/4.1", p).data;
    p["lambda"] = 0;
    auto der = *make_bialgebra_entry("bialg/4.1", p).data;
    EXPECT_TRUE(verify_isomorphism(cat, der, cols2({1, 0}, {0, d}), -1)) << to_string(d);
  }
}

TEST(VerifyIsomorphism, OnlyOneScalingConventionFitsAllQuotedMaps) {
  std::vector<std::function<Scalar(const Scalar&)>> conventions = {
      [](const Scalar& s) { return s; }, [](const Scalar& s) { return -s; },
      [](const Scalar& s) { return 1 / s; }, [](const Scalar& s) { return -1 / s; }};
  int fitting = 0;
  for (std::size_t c = 0; c < conventions.size(); ++c) {
    bool all = true;
    for (const auto& q : quoted_maps())
      all = all && verify_isomorphism(q.catalog_side, q.derived_side, q.t, conventions[c](q.s));
    if (all) {
      ++fitting;
      EXPECT_EQ(c, 0u);
    }
  }
  EXPECT_EQ(fitting, 1);
}

TEST(VerifyIsomorphism, IdentityAndTransport) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    auto d = bicross::testing::random_nplus1(rng);
    std::size_t n = d.g1.dim();
    EXPECT_TRUE(verify_isomorphism(d, d, Matrix::identity(n), 1));
    Matrix tr = rng.invertible(n);
    EXPECT_TRUE(verify_isomorphism(bicross::testing::transport(d, tr), d, tr, 1));
  }
}

TEST(VerifyIsomorphism, SingularMapThrows) {
  auto d = catalog_entry("2+1/4.2").data;
  EXPECT_THROW(verify_isomorphism(d, d, Matrix(2, 2), 1), std::invalid_argument);
  EXPECT_THROW(verify_isomorphism(d, d, Matrix::identity(2), 0), std::invalid_argument);
}

TEST(PowerIdentity, ClaimedFormHoldsUpToSecondPower) {
  Rng rng(31);
  for (const auto& e : catalog())
    for (unsigned n = 0; n <= 2; ++n) EXPECT_TRUE(check_power_identity(e.data, n)) << e.name << " n=" << n;
  for (int t = 0; t < 300; ++t) {
    auto d = bicross::testing::random_nplus1(rng);
    for (unsigned n = 0; n <= 2; ++n) EXPECT_TRUE(check_power_identity(d, n));
  }
}

TEST(PowerIdentity, ClaimedFormFailsAtThirdPowerForCase43) {
  // chi(beta^3 [X,Y]) = -a while 3 (chi(beta^3 X) chi(Y) - chi(beta^3 Y) chi(X)) = -3a
  for (int a : {1, -1}) {
    auto d = catalog_entry("2+1/4.3?a=" + std::to_string(a)).data;
    EXPECT_FALSE(check_power_identity(d, 3));
    Vector x = unit_vector(2, 0), y = unit_vector(2, 1);
    Matrix b3 = d.beta * d.beta * d.beta;
    EXPECT_EQ(d.chi_of(b3 * d.g1.bracket(x, y)), -a);
    EXPECT_EQ(3 * (d.chi_of(b3 * x) * d.chi_of(y) - d.chi_of(b3 * y) * d.chi_of(x)), -3 * a);
  }
}

TEST(PowerIdentity, RecursiveExpansionHoldsToFourthPower) {
  // f_n(U,V) = chi(beta^n [U,V]) obeys
  // f_n(U,V) = f_{n-1}(U, bV) + f_{n-1}(bU, V) + chi(V) chi(b^n U) - chi(U) chi(b^n V).
  std::function<Scalar(const NPlus1Data&, unsigned, const Vector&, const Vector&)> f =
      [&](const NPlus1Data& d, unsigned n, const Vector& u, const Vector& v) -> Scalar {
    if (n == 0) return 0;
    Matrix p = Matrix::identity(d.g1.dim());
    for (unsigned k = 0; k < n; ++k) p = d.beta * p;
    return f(d, n - 1, u, d.beta_of(v)) + f(d, n - 1, d.beta_of(u), v) + d.chi_of(v) * d.chi_of(p * u) -
           d.chi_of(u) * d.chi_of(p * v);
  };
  Rng rng(37);
  std::vector<NPlus1Data> data;
  for (const auto& e : catalog()) data.push_back(e.data);
  for (int t = 0; t < 100; ++t) data.push_back(bicross::testing::random_nplus1(rng));
  for (const auto& d : data) {
    std::size_t m = d.g1.dim();
    for (unsigned n = 0; n <= 4; ++n) {
      Matrix p = Matrix::identity(m);
      for (unsigned k = 0; k < n; ++k) p = d.beta * p;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          Vector x = unit_vector(m, i), y = unit_vector(m, j);
          EXPECT_EQ(d.chi_of(p * d.g1.bracket(x, y)), f(d, n, x, y));
        }
    }
  }
}
