#include "lps/contact/normality.hpp"
#include "lps/contact/verify.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

namespace {

using lps::contact::AcStructure;
using lps::contact::LapStructure;
using lps::geo::Chart;
using lps::geo::Expr;
using lps::geo::MetricField;
using lps::geo::TensorField;
using lps::testing::canon;

using Rows = std::vector<std::vector<std::string>>;

TensorField mat(const Chart& c, int up, int down, const Rows& rows) {
  lps::geo::Matrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const auto& s : r) m.back().push_back(canon(s));
  }
  return TensorField::from_matrix(c, up, down, m);
}

TensorField vec(const Chart& c, std::vector<std::string> v, bool form = false) {
  std::vector<Expr> e;
  for (const auto& s : v) e.push_back(canon(s));
  return form ? TensorField::one_form(c, e) : TensorField::vector(c, e);
}

const Chart r3({"x", "y", "z"});
const Chart r5({"x", "y", "z", "t", "s"});

AcStructure structure_61() {
  return AcStructure(mat(r5, 1, 1,
                         {{"-1", "0", "0", "0", "0"},
                          {"0", "-1", "0", "0", "0"},
                          {"0", "0", "-1", "0", "0"},
                          {"0", "0", "0", "-1", "0"},
                          {"-1", "0", "-1", "0", "0"}}),
                     vec(r5, {"0", "0", "0", "0", "-1"}), vec(r5, {"-1", "0", "-1", "0", "1"}, true));
}

LapStructure structure_64() {
  const AcStructure ac(mat(r3, 1, 1, {{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "0"}}), vec(r3, {"0", "0", "-1"}),
                       vec(r3, {"0", "0", "1"}, true));
  return LapStructure(ac, MetricField(mat(r3, 0, 2, {{"exp(-2*z)", "0", "0"}, {"0", "exp(2*z)", "0"}, {"0", "0", "-1"}})));
}

LapStructure structure_63() {
  const AcStructure ac(mat(r3, 1, 1, {{"-1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "0"}}), vec(r3, {"0", "0", "-1"}),
                       vec(r3, {"0", "0", "1"}, true));
  return LapStructure(ac, MetricField(mat(r3, 0, 2, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}})));
}

const lps::geo::CheckEntry& entry(const lps::geo::StructureReport& r, std::string_view id) {
  const auto* e = r.find(id);
  if (e == nullptr) throw std::runtime_error("missing entry " + std::string(id));
  return *e;
}

TEST(AlmostContact, Example61IsNormal) {
  const AcStructure s = structure_61();
  const auto ac = lps::contact::verify_ac(s);
  EXPECT_TRUE(ac.passed());
  EXPECT_EQ(ac.entries.size(), 5u);
  EXPECT_TRUE(lps::contact::normality_entry(s).holds);
  const TensorField n = lps::contact::normality_tensor(s);
  for (const auto& c : n.components()) EXPECT_TRUE(c.is_zero());
}

TEST(AlmostContact, ClassicalSignsAreParametrized) {
  // phi^2 = -I + eta (x) xi with eta(xi) = 1.
  const AcStructure s(mat(r3, 1, 1, {{"0", "-1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}}), vec(r3, {"0", "0", "1"}),
                      vec(r3, {"0", "0", "1"}, true), -1, 1);
  EXPECT_TRUE(lps::contact::verify_ac(s).passed());
  const AcStructure wrong(s.phi(), s.xi(), s.eta(), 1, 1);
  const auto r = lps::contact::verify_ac(wrong);
  EXPECT_FALSE(entry(r, "2.2").holds);
  EXPECT_FALSE(entry(r, "2.4").holds);
}

TEST(AlmostContact, IdentityFailsEveryAxiomButOne) {
  const AcStructure s(TensorField::identity(r3), vec(r3, {"0", "0", "-1"}), vec(r3, {"0", "0", "1"}, true));
  const auto r = lps::contact::verify_ac(s);
  EXPECT_FALSE(entry(r, "2.1").holds);
  EXPECT_FALSE(entry(r, "2.3").holds);
  EXPECT_TRUE(entry(r, "2.4").holds);
  EXPECT_FALSE(entry(r, "2.5").holds);
}

TEST(AlmostContact, ShapeErrors) {
  EXPECT_THROW(AcStructure(TensorField::identity(r3), vec(r3, {"0", "0", "1"}, true), vec(r3, {"0", "0", "1"}, true)),
               lps::geo::GeometryError);
  EXPECT_THROW(AcStructure(TensorField::identity(r3), vec(r3, {"0", "0", "1"}), vec(r3, {"0", "0", "1"}, true), 2, 1),
               lps::geo::GeometryError);
}

TEST(Lorentzian, Example64IsParaSasakian) {
  const LapStructure s = structure_64();
  EXPECT_TRUE(lps::contact::verify_lap(s).passed());
  EXPECT_TRUE(lps::contact::verify_lp_contact(s).passed());
  const auto lps = lps::contact::verify_lp_sasakian(s);
  EXPECT_TRUE(lps.passed());
  for (const auto& e : lps.entries) EXPECT_LT(e.max_residual, 1e-9) << e.id;
  EXPECT_FALSE(lps::contact::verify_affinely_cosymplectic(s.ac(), s.connection()).passed());
}

// nabla_X xi with Christoffel symbols from central differences of g.
TEST(Lorentzian, Example64NablaXiOracle) {
  const LapStructure s = structure_64();
  const double h = 1e-5;
  for (const auto& p : lps::geo::sample_points(r3, {})) {
    auto g_at = [&](double dz) {
      auto q = p;
      q.set("z", p.at("z") + dz);
      Eigen::Matrix3d m;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = lps::sym::eval(s.metric().at(i, j), q);
      return m;
    };
    const Eigen::Matrix3d dgz = (g_at(h) - g_at(-h)) / (2 * h);
    const Eigen::Matrix3d inv = g_at(0).inverse();
    // xi = -d_z, so (nabla_{d_i} xi)^k = -Gamma^k_iz = -1/2 g^kk d_z g_ki here.
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) {
        const double gamma_kiz = k == i ? 0.5 * inv(k, k) * dgz(k, i) : 0.0;
        const double expected = lps::sym::eval(s.ac().phi().at(k, i), p);
        EXPECT_NEAR(-gamma_kiz, expected, 1e-6) << "k=" << k << " i=" << i;
      }
    }
  }
}

TEST(Lorentzian, Example63IsLapButNotContact) {
  const LapStructure s = structure_63();
  EXPECT_TRUE(lps::contact::verify_lap(s).passed());
  // Phi(d_x, d_x) = g(d_x, phi d_x) = -1, while nabla eta = 0 for the flat metric.
  const auto lpc = lps::contact::verify_lp_contact(s);
  EXPECT_FALSE(entry(lpc, "2.10").holds);
  EXPECT_FALSE(lps::contact::verify_lp_sasakian(s).passed());
  EXPECT_TRUE(lps::contact::normality_entry(s.ac()).holds);
}

TEST(Lorentzian, RiemannianMetricFailsSignature) {
  const LapStructure s(structure_63().ac(),
                       MetricField(mat(r3, 0, 2, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}})));
  const auto r = lps::contact::verify_lap(s);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(entry(r, "xi-unit").holds);
}

TEST(Lorentzian, DependentSuitesRecordPreconditions) {
  const LapStructure s = structure_63();
  const auto r = lps::contact::verify_lp_sasakian(s);
  EXPECT_TRUE(entry(r, "pre:lap").holds);
  EXPECT_FALSE(entry(r, "nabla-xi").holds);
}

TEST(Affine, Example61ZeroConnectionIsCosymplectic) {
  const AcStructure s = structure_61();
  const auto r = lps::contact::verify_affinely_cosymplectic(s, lps::geo::Connection::zero(r5));
  EXPECT_TRUE(r.passed());
  EXPECT_NE(r.find("affine-normal"), nullptr);
}

TEST(Automorphism, RecordedAsFindings) {
  // xi = d_x on a phi depending on x: L_xi phi = d_x phi != 0.
  const AcStructure s(mat(r3, 1, 1, {{"0", "0", "0"}, {"0", "0", "exp(x)"}, {"0", "exp(-x)", "0"}}),
                      vec(r3, {"1", "0", "0"}), vec(r3, {"-1", "0", "0"}, true));
  const auto r = lps::contact::xi_automorphism_check(s);
  EXPECT_FALSE(entry(r, "lie-xi-phi").holds);
  EXPECT_TRUE(entry(r, "lie-xi-eta").holds);
  EXPECT_TRUE(r.passed());
}

}  // namespace
