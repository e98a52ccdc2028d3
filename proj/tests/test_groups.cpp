#include <gtest/gtest.h>

#include <cmath>

#include "bicross/group_checks.hpp"
#include "support.hpp"

using namespace bicross;
using bicross::testing::Rng;

namespace {

SampleConfig config(std::size_t count, unsigned long long seed = 1) {
  SampleConfig c;
  c.count = count;
  c.seed = seed;
  return c;
}

// Hand-entered Lie data read off the group laws: brackets as (i, j, k, value)
// with i < j, chi per basis vector, beta columns.
struct Expected {
  std::vector<std::tuple<int, int, int, double>> brackets;
  std::vector<double> chi;
  std::vector<double> beta;  // beta[k*n + j]
};

void expect_estimate(const InfinitesimalEstimate& est, const Expected& e, double tol) {
  std::size_t n = est.n;
  std::vector<double> c(n * n * n, 0.0);
  for (auto [i, j, k, v] : e.brackets) {
    c[(i * n + j) * n + k] = v;
    c[(j * n + i) * n + k] = -v;
  }
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_NEAR(est.constants[k], c[k], tol) << "bracket slot " << k;
  for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(est.chi[k], e.chi[k], tol) << "chi " << k;
  for (std::size_t k = 0; k < n * n; ++k) EXPECT_NEAR(est.beta[k], e.beta[k], tol) << "beta slot " << k;
}

}  // namespace

TEST(ChartGroups, AxiomsHoldForEveryEntry) {
  for (const auto& p : catalog_group_pairs()) {
    for (const ChartGroup* g : {&p.g, &p.g1, &p.g2}) {
      AxiomResiduals r = group_axiom_residuals(*g, config(1000));
      EXPECT_LE(r.associativity, 1e-9) << p.full_name() << " " << g->name;
      EXPECT_LE(r.inverse, 1e-9) << p.full_name() << " " << g->name;
      EXPECT_LE(r.unit, 1e-9) << p.full_name() << " " << g->name;
    }
  }
}

TEST(ChartGroups, DeterminantAgainstCofactorExpansion) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    std::vector<double> m(9);
    for (double& x : m) x = rng.uniform(-9, 9) / 3.0;
    double cof = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                 m[2] * (m[3] * m[7] - m[4] * m[6]);
    EXPECT_NEAR(dense_determinant(m, 3), cof, 1e-12);
  }
}

TEST(ChartGroups, CircleDifferenceWraps) {
  ChartGroup c = circle_group("T");
  Point d = coordinate_difference(c, {3.1}, {-3.1});
  EXPECT_NEAR(d[0], 6.2 - 2 * M_PI, 1e-15);
}

TEST(GroupPairs, IdentitiesHoldOverThousandSamples) {
  for (const auto& p : catalog_group_pairs()) {
    for (unsigned long long seed : {1ULL, 2ULL}) {
      ResidualReport r = check_group_matched_pair(p, config(1000, seed));
      EXPECT_EQ(r.samples, 1000u);
      for (const auto& [name, v] : r.max_residual) EXPECT_LE(v, 1e-9) << p.full_name() << " " << name;
      EXPECT_TRUE(r.ok()) << p.full_name();
    }
  }
}

TEST(GroupPairs, ParameterSweepsHold) {
  std::vector<std::string> names = {"group/4.1?d=2",     "group/4.1?d=1/2",      "group/4.1?b=3&d=1",
                                    "group/4.1?d=0",     "group/4.2?d=3",        "group/4.2?d=1",
                                    "group/ex3.5?n=-3",  "group/ex3.5?n=1",      "group/split-2.1?r=-1",
                                    "group/split-3?a=2", "group/split-2.1?r=1"};
  for (const auto& n : names) {
    GroupMatchedPair p = group_pair(n);
    ResidualReport r = check_group_matched_pair(p, config(300));
    EXPECT_LE(r.worst(), 1e-9) << n;
    InfinitesimalEstimate est = infinitesimal_data(p);
    for (const auto& m : p.matches) EXPECT_TRUE(match_to_catalog(est, m).ok()) << n << " " << m.label;
  }
}

TEST(GroupPairs, SignFlippedAlphaIsCaught) {
  for (std::string n : {"group/4.1", "group/4.3+", "group/4.3=0", "group/split-3"}) {
    GroupMatchedPair p = group_pair(n);
    auto alpha = p.alpha;
    const ChartGroup g2 = p.g2;
    p.alpha = [alpha, g2](const Point& g, const Point& s) { return g2.inverse(alpha(g, s)); };
    ResidualReport r = check_group_matched_pair(p, config(200));
    EXPECT_GE(r.worst(), 1e-2) << n;
    EXPECT_FALSE(r.ok()) << n;
  }
}

TEST(GroupPairs, OnePlusOneAtUnitIsTrivial) {
  GroupMatchedPair p = group_pair("group/1+1");
  for (double g : {-3.0, -0.5, 0.25, 2.0, 7.0}) {
    EXPECT_NEAR(p.alpha({g}, {1.0})[0], 1.0, 1e-15);
    EXPECT_NEAR(p.beta({1.0}, {g})[0], g, 1e-15);
  }
}

TEST(GroupPairs, TwistTermContinuousAtOne) {
  for (double s : {-4.0, -0.3, 0.2, 1.0, 5.0}) {
    double limit = s * std::log(std::abs(s));
    EXPECT_DOUBLE_EQ(twist_term(s, 1), limit);
    EXPECT_NEAR(twist_term(s, 1 + 1e-6), limit, 1e-4);
    EXPECT_NEAR(twist_term(s, 1 - 1e-6), limit, 1e-4);
  }
}

TEST(GroupPairs, DegenerateAlphaFromMatrixDecomposition) {
  GroupMatchedPair p = group_pair("group/4.3=0");
  DomainSampler ds(p, config(0));
  for (int k = 0; k < 500; ++k) {
    auto [g, s] = ds.draw();
    // i(g) j(s) = [[p, q], [r, *]]; the lower unitriangular factor on the left has entry r / p.
    Point m = matmul2(p.embed1(g), p.embed2(s));
    double a = g[0], x = g[1], t = s[0];
    EXPECT_NEAR(p.alpha(g, s)[0], m[2] / m[0], 1e-9 * (1 + std::abs(m[2] / m[0])));
    EXPECT_NEAR(p.alpha(g, s)[0], t / (a * (a + x * t)), 1e-9 * (1 + std::abs(m[2] / m[0])));
  }
}

TEST(GroupPairs, UnknownNamesAndBadParametersThrow) {
  EXPECT_THROW(group_pair("group/9.9"), std::invalid_argument);
  EXPECT_THROW(group_pair("group/4.1?q=1"), std::invalid_argument);
  EXPECT_THROW(group_pair("group/4.1?b=1&d=2"), std::invalid_argument);
  EXPECT_THROW(group_pair("group/ex3.5?n=0"), std::invalid_argument);
  EXPECT_THROW(group_pair("group/split-2.1?r=3"), std::invalid_argument);
}

TEST(GroupPairs, SamplerGivesUpOutsideReach) {
  GroupMatchedPair p = group_pair("group/4.1");
  SampleConfig c = config(10);
  c.min_margin = 1e9;
  DomainSampler ds(p, c);
  EXPECT_THROW(ds.draw(), std::runtime_error);
}

TEST(Infinitesimal, MatchesHandEnteredData) {
  // 4.1 with d = -1, b = 0: [X,Y] = -Y, chi = (1,0), beta(X) = -X, beta(Y) = Y.
  expect_estimate(infinitesimal_data(group_pair("group/4.1")), {{{0, 1, 1, -1.0}}, {1, 0}, {-1, 0, 0, 1}}, 1e-6);
  // 4.1 with d = 1, b = 1: [X,Y] = Y, beta(X) = -X - Y, beta(Y) = -Y.
  expect_estimate(infinitesimal_data(group_pair("group/4.1?b=1&d=1")), {{{0, 1, 1, 1.0}}, {1, 0}, {-1, 0, -1, -1}},
                  1e-6);
  // 4.2 with d = 2: [X,Y] = 2Y, beta(X) = Y.
  expect_estimate(infinitesimal_data(group_pair("group/4.2?d=2")), {{{0, 1, 1, 2.0}}, {1, 0}, {0, 0, 1, 0}}, 1e-6);
  // 4.3+: [X,Y] = Y, chi = (-1,0), beta(X) = -X, beta(Y) = 2X + Y.
  expect_estimate(infinitesimal_data(group_pair("group/4.3+")), {{{0, 1, 1, 1.0}}, {-1, 0}, {-1, 2, 0, 1}}, 1e-6);
  // 4.3-: beta(X) = -Y, beta(Y) = X.
  expect_estimate(infinitesimal_data(group_pair("group/4.3-")), {{{0, 1, 1, 1.0}}, {-1, 0}, {0, 1, -1, 0}}, 1e-6);
  // 4.3=0: [X,Y] = 2Y, chi = (-2,0), beta(Y) = X.
  expect_estimate(infinitesimal_data(group_pair("group/4.3=0")), {{{0, 1, 1, 2.0}}, {-2, 0}, {0, 1, 0, 0}}, 1e-6);
  // ex3.5 with n = 3: [X,Y] = 3Y, beta(X) = -X, beta(Y) = -3Y.
  expect_estimate(infinitesimal_data(group_pair("group/ex3.5?n=3")), {{{0, 1, 1, 3.0}}, {1, 0}, {-1, 0, 0, -3}},
                  1e-6);
  // 1+1: chi = 1, beta = -1.
  expect_estimate(infinitesimal_data(group_pair("group/1+1")), {{}, {1}, {-1}}, 1e-6);
}

TEST(Infinitesimal, EveryEntryMatchesItsAlgebra) {
  for (const auto& p : catalog_group_pairs()) {
    InfinitesimalEstimate est = infinitesimal_data(p);
    EXPECT_FALSE(p.matches.empty()) << p.full_name();
    for (const auto& m : p.matches) {
      MatchReport r = match_to_catalog(est, m);
      EXPECT_TRUE(r.ok()) << p.full_name() << " " << m.label << " " << r.deviation;
      EXPECT_TRUE(verify_isomorphism(m.source, image_data(m.source, m.t, m.s), m.t, m.s));
    }
  }
}

TEST(Infinitesimal, QuotedMapsPresentForTrigonometricCases) {
  for (std::string n : {"group/4.3+", "group/4.3-"}) {
    GroupMatchedPair p = group_pair(n);
    bool quoted = false;
    for (const auto& m : p.matches) quoted |= m.label == "quoted";
    EXPECT_TRUE(quoted) << n;
  }
}

TEST(Infinitesimal, StepOutsideRangeThrows) {
  GroupMatchedPair p = group_pair("group/4.2");
  EXPECT_THROW(infinitesimal_data(p, 1e-2), std::invalid_argument);
  EXPECT_THROW(infinitesimal_data(p, 1e-8), std::invalid_argument);
}

TEST(ImageData, PropertyAgainstVerifyIsomorphism) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    NPlus1Data a = bicross::testing::random_nplus1(rng);
    Matrix t = rng.invertible(a.g1.dim());
    Scalar s = rng.nonzero(3);
    NPlus1Data b = image_data(a, t, s);
    EXPECT_TRUE(verify_isomorphism(a, b, t, s));
    EXPECT_TRUE(check_nplus1(b).ok());
  }
}

TEST(ImageData, RejectsZeroScale) {
  Rng rng(2);
  NPlus1Data a = bicross::testing::random_nplus1(rng);
  EXPECT_THROW(image_data(a, Matrix::identity(a.g1.dim()), 0), std::invalid_argument);
}

TEST(Modular, ClosedFormsAgreeWithOracle) {
  for (const auto& p : catalog_group_pairs()) {
    KacReport k = kac_criterion(p, config(100));
    EXPECT_LE(k.modular_oracle_residual, 1e-6) << p.full_name();
  }
}

TEST(Modular, AbelianFactorsAreUnimodular) {
  std::mt19937_64 rng(5);
  for (const auto& p : catalog_group_pairs()) {
    if (p.g2.dim != 1) continue;
    for (int k = 0; k < 100; ++k) EXPECT_EQ(modular_function(p.g2, p.g2.sample(rng, config(1))), 1.0) << p.full_name();
  }
}

TEST(Modular, OutsideGroupThrows) {
  GroupMatchedPair p = group_pair("group/1+1");
  EXPECT_THROW(modular_function(p.g1, {0.0}), std::domain_error);
}

TEST(Kac, OutcomesPerEntry) {
  for (const auto& p : catalog_group_pairs()) {
    if (!p.kac_expected) continue;
    KacReport k = kac_criterion(p, config(500));
    EXPECT_EQ(k.kac(), *p.kac_expected) << p.full_name();
    if (!*p.kac_expected) EXPECT_GE(k.eq1_deviation, 1e-2) << p.full_name();
  }
}

TEST(Kac, ModularElementClosedForms) {
  for (std::string n : {"group/4.1", "group/4.1?d=2", "group/4.2", "group/4.2?d=3", "group/4.3+", "group/4.3-",
                        "group/4.3=0"}) {
    KacReport k = kac_criterion(group_pair(n), config(500));
    ASSERT_TRUE(k.delta_m_residual.has_value()) << n;
    EXPECT_LE(*k.delta_m_residual, 1e-9) << n;
    if (k.delta_m_hat_residual) EXPECT_LE(*k.delta_m_hat_residual, 1e-9) << n;
  }
}

TEST(Kac, PowerCaseHasTrivialModularElement) {
  KacReport k = kac_criterion(group_pair("group/4.2"), config(1000));
  EXPECT_TRUE(k.eq1);
  EXPECT_LE(k.delta_m_unit_deviation, 1e-12);
}

TEST(Kac, PreservationImpliesKac) {
  std::size_t preserving = 0;
  for (const auto& p : catalog_group_pairs()) {
    if (!preserves_modular_and_haar(p, config(50))) continue;
    ++preserving;
    EXPECT_TRUE(kac_criterion(p, config(500)).kac()) << p.full_name();
  }
  EXPECT_GE(preserving, 2u);
}
