#include "lps/contact/verify.hpp"
#include "lps/hypersurface/decompose.hpp"
#include "lps/hypersurface/gauss.hpp"
#include "lps/hypersurface/theorems.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

namespace {

using namespace lps;
using lps::hyp::InvarianceTag;
using lps::testing::canon;
using lps::testing::find_entry;

double at(const sym::Expr& e, const sym::SamplePoint& p) { return sym::eval(e, p); }

void expect_matrix(const geo::TensorField& t, const lps::testing::Rows& rows) {
  const auto expected = lps::testing::matrix_field(t.chart(), t.up(), t.down(), rows);
  for (std::size_t k = 0; k < t.components().size(); ++k) {
    EXPECT_TRUE(sym::exprs_equivalent(t[k], expected[k], t.chart().domain())) << k << ": " << t[k].str();
  }
}

void expect_vector(const std::vector<sym::Expr>& v, const std::vector<std::string>& expected, const geo::Chart& c) {
  ASSERT_EQ(v.size(), expected.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    EXPECT_TRUE(sym::exprs_equivalent(v[k], canon(expected[k]), c.domain())) << k << ": " << v[k].str();
  }
}

class Example64M1 : public ::testing::Test {
 protected:
  contact::LapStructure lap = lps::testing::structure_64();
  hyp::Immersion imm = lps::testing::immersion(lps::testing::r3(), {"x", "y"}, {"x", "y", "x + y"});
};

TEST_F(Example64M1, FrameAndClassification) {
  const auto frame = hyp::tangent_frame(imm);
  expect_vector(frame[0], {"1", "0", "1"}, imm.params());
  expect_vector(frame[1], {"0", "1", "1"}, imm.params());
  const auto cls = hyp::classify_invariance(imm, lap.ac());
  EXPECT_EQ(cls.tag, InvarianceTag::NoninvariantTransversalXi);
  EXPECT_EQ(cls.xi.transversal_points, 20);
}

TEST_F(Example64M1, DecompositionAlongXi) {
  const auto d = hyp::phi_decompose(imm, lap.ac(), imm.pull(lap.ac().xi()));
  EXPECT_TRUE(d.reconstruction.holds);
  EXPECT_TRUE(d.reconstruction.symbolic);
  expect_matrix(d.J, {{"1", "0"}, {"0", "-1"}});
  expect_vector(d.alpha.components(), {"1", "-1"}, imm.params());
}

TEST_F(Example64M1, MetricNormalAgainstNullVector) {
  const auto n = hyp::metric_normal(imm, lap.metric());
  expect_vector(n, {"exp(2*(x + y))", "exp(-2*(x + y))", "1"}, imm.params());
  for (const auto& p : geo::sample_points(imm.params(), {})) {
    Eigen::Vector3d x(p.at("x"), p.at("y"), p.at("x") + p.at("y"));
    const Eigen::MatrixXd g = lps::testing::metric_64(x);
    Eigen::MatrixXd covectors(2, 3);
    covectors.row(0) = (g * Eigen::Vector3d(1, 0, 1)).transpose();
    covectors.row(1) = (g * Eigen::Vector3d(0, 1, 1)).transpose();
    const Eigen::Vector3d null = covectors.fullPivLu().kernel().col(0);
    const Eigen::Vector3d got(at(n[0], p), at(n[1], p), at(n[2], p));
    EXPECT_LT(null.normalized().cross(got.normalized()).norm(), 1e-9);
    // The printed second component breaks orthogonality to u2.
    const Eigen::Vector3d printed(std::exp(2 * x(2)), std::exp(2 * x(2)), 1);
    EXPECT_GT(std::abs(covectors.row(1).dot(printed)), 1e-3);
    EXPECT_LT(std::abs(covectors.row(0).dot(printed)), 1e-9);
  }
}

TEST_F(Example64M1, GaussWeingartenMatchesNumericOracle) {
  const auto xi = imm.pull(lap.ac().xi());
  const auto gw = hyp::gauss_weingarten(imm, lap.connection(), xi);
  expect_matrix(gw.A, {{"-1", "0"}, {"0", "1"}});
  expect_vector(gw.w.components(), {"1", "-1"}, imm.params());
  for (const auto& p : geo::sample_points(imm.params(), {})) {
    const auto o = lps::testing::numeric_gauss(imm, lps::testing::metric_64, xi, p);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        EXPECT_LT(lps::testing::close_rel(at(gw.h.at(a, b), p), o.h(a, b)), 1e-6);
        EXPECT_LT(lps::testing::close_rel(at(gw.A.at(a, b), p), o.A(a, b)), 1e-6);
        for (int c = 0; c < 2; ++c) {
          EXPECT_LT(lps::testing::close_rel(at(gw.induced.gamma(c, a, b), p), o.gamma[c](a, b)), 1e-6);
        }
      }
      EXPECT_LT(lps::testing::close_rel(at(gw.w.at(a), p), o.w(a)), 1e-6);
    }
  }
}

TEST_F(Example64M1, NoninvariantTheorems) {
  const auto r = hyp::verify_noninvariant_lps(imm, lap);
  for (const char* id : {"3.1", "C-involution", "5.5a", "5.5b", "5.6a", "5.6b", "3.3", "lemma-5.4", "5.1"}) {
    const auto& e = find_entry(r, id);
    EXPECT_TRUE(e.holds) << id << ": " << e.witness;
    EXPECT_LT(e.max_residual, 1e-9) << id;
  }
  const auto& e59 = find_entry(r, "5.9");
  EXPECT_FALSE(e59.holds);
  EXPECT_NE(e59.witness.find("alpha(u2) J(u1) vs alpha(J u2) u1"), std::string::npos) << e59.witness;
  EXPECT_NE(e59.witness.find("lhs=-1 rhs=1"), std::string::npos) << e59.witness;
  EXPECT_TRUE(r.passed());
}

TEST_F(Example64M1, ProductMetric) {
  const auto d = hyp::phi_decompose(imm, lap.ac(), imm.pull(lap.ac().xi()));
  const auto pm = hyp::almost_product_metric(imm, lap, d);
  expect_matrix(pm.G, {{"exp(-2*(x + y))", "-2"}, {"-2", "exp(2*(x + y))"}});
  EXPECT_FALSE(find_entry(pm.report, "5.1-printed").holds);
  EXPECT_TRUE(find_entry(pm.report, "lemma-5.4").holds);
}

TEST_F(Example64M1, InvariantExtractionRefused) {
  EXPECT_THROW(hyp::induced_invariant_structure(imm, lap.ac(), &lap.metric()), hyp::PreconditionError);
  const auto r = hyp::verify_invariant_lps(imm, lap);
  EXPECT_FALSE(find_entry(r, "pre:invariant-tangent").holds);
}

TEST(Example64M2, XiTangentNoninvariant) {
  const auto lap = lps::testing::structure_64();
  const auto imm = lps::testing::immersion(lps::testing::r3(), {"y", "z"}, {"arctan(y)", "y", "z"});
  const auto frame = hyp::tangent_frame(imm);
  expect_vector(frame[0], {"1/(1 + y^2)", "1", "0"}, imm.params());
  const auto cls = hyp::classify_invariance(imm, lap.ac());
  EXPECT_EQ(cls.tag, InvarianceTag::NoninvariantTangentXi);
  const auto n = hyp::metric_normal(imm, lap.metric());
  // Proportional to the printed normal (e^{2z}, -e^{-2z}/(1+y^2), 0).
  for (const auto& p : geo::sample_points(imm.params(), {})) {
    const double q = 1 + p.at("y") * p.at("y"), z = p.at("z");
    EXPECT_LT(std::abs(at(n[0], p) * (-std::exp(-2 * z) / q) - at(n[1], p) * std::exp(2 * z)), 1e-9);
    EXPECT_LT(std::abs(at(n[2], p)), 1e-12);
  }
  // phi v1 = a v1 + c N, solved numerically against the printed N.
  const auto d = hyp::phi_decompose(imm, lap.ac(), n);
  EXPECT_TRUE(d.reconstruction.holds);
  for (const auto& p : geo::sample_points(imm.params(), {})) {
    const double y = p.at("y"), z = p.at("z"), q = 1 + y * y;
    Eigen::Matrix3d basis;
    basis.col(0) << 1 / q, 1, 0;
    basis.col(1) << 0, 0, 1;
    basis.col(2) << std::exp(2 * z), -std::exp(-2 * z) / q, 0;
    const Eigen::Vector3d phi_v1(1 / q, -1, 0);
    const Eigen::Vector3d c = basis.fullPivLu().solve(phi_v1);
    const double denom = q * q * std::exp(2 * z) + std::exp(-2 * z);
    EXPECT_NEAR(c(0), (std::exp(-2 * z) - q * q * std::exp(2 * z)) / denom, 1e-9);
    EXPECT_NEAR(c(2), 2 * q / denom, 1e-9);
    const double printed = 2 * q / (q * q * std::exp(2 * z) - std::exp(-2 * z));
    EXPECT_GT(std::abs(c(2) - printed), 1e-6);
    EXPECT_NEAR(c(0), at(d.J.at(0, 0), p), 1e-9);
  }
}

TEST(Example64Plane, InvariantParaSasakianInstance) {
  const auto lap = lps::testing::structure_64();
  const auto imm = lps::testing::immersion(lps::testing::r3(), {"y", "z"}, {"0", "y", "z"});
  EXPECT_EQ(hyp::classify_invariance(imm, lap.ac()).tag, InvarianceTag::InvariantTangentXi);
  const auto r = hyp::verify_invariant_lps(imm, lap);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(find_entry(r, "gauss-lc").holds);
}

TEST(Example63, InducedLorentzianStructure) {
  const auto lap = lps::testing::structure_63();
  const auto imm = lps::testing::immersion(lps::testing::r3(), {"y", "z"}, {"arcsin(y)", "y", "z"},
                                           sym::DomainBox({{"y", {-0.9, 0.9}}}));
  EXPECT_EQ(hyp::classify_invariance(imm, lap.ac()).tag, InvarianceTag::InvariantTangentXi);
  const auto inv = hyp::induced_invariant_structure(imm, lap.ac(), &lap.metric());
  // u1 = (1/sqrt(1-y^2), 1, 0), u2 = d_z: phi u1 = -u1, phi u2 = 0, xi = -u2.
  expect_matrix(inv.psi, {{"-1", "0"}, {"0", "0"}});
  expect_vector(inv.xi_star.components(), {"0", "-1"}, imm.params());
  expect_vector(inv.eta_star.components(), {"0", "1"}, imm.params());
  EXPECT_TRUE(inv.report.passed());
  for (const char* id : {"5.14", "5.15", "5.16", "5.17", "lap:2.7", "lap:2.9"}) EXPECT_TRUE(find_entry(inv.report, id).holds) << id;
  EXPECT_TRUE(contact::verify_ac(inv.ac()).passed());
  const auto r = hyp::verify_invariant_lps(imm, lap);
  EXPECT_FALSE(find_entry(r, "pre:lp-sasakian").holds);
  EXPECT_THROW(hyp::phi_decompose(imm, lap.ac(), imm.pull(lap.ac().xi())), hyp::HypersurfaceError);
}

TEST(Example61, NoninvariantGraphM1) {
  const auto ac = lps::testing::structure_61();
  const auto imm = lps::testing::immersion(lps::testing::r5(), {"x", "y", "z", "t"}, {"x", "y", "z", "t", "x"});
  EXPECT_EQ(hyp::classify_invariance(imm, ac).tag, InvarianceTag::NoninvariantTransversalXi);
  const auto d = hyp::phi_decompose(imm, ac, imm.pull(ac.xi()));
  EXPECT_TRUE(d.reconstruction.symbolic);
  expect_matrix(d.J, {{"-1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"0", "0", "0", "-1"}});
  expect_vector(d.alpha.components(), {"0", "0", "1", "0"}, imm.params());
  const auto r = hyp::verify_affine_case(imm, ac, geo::Connection::zero(lps::testing::r5()),
                                         hyp::TransversalChoice::characteristic());
  EXPECT_TRUE(r.passed());
  for (const char* id : {"4.1-A", "4.1-w", "4.1-nablaJ", "4.1-nabla-alpha"}) {
    const auto& e = find_entry(r, id);
    EXPECT_TRUE(e.holds) << id;
    EXPECT_EQ(e.kind, geo::EntryKind::Identity) << id;
  }
}

TEST(Example61, InvariantM2) {
  const auto ac = lps::testing::structure_61();
  const auto imm = lps::testing::immersion(lps::testing::r5(), {"y", "z", "t", "s"}, {"y", "y", "z", "t", "s"});
  EXPECT_EQ(hyp::classify_invariance(imm, ac).tag, InvarianceTag::InvariantTangentXi);
  const auto inv = hyp::induced_invariant_structure(imm, ac, nullptr);
  // u1 = d_x + d_y: phi u1 = -u1 - u4; phi u2 = -u2 - u4; phi u3 = -u3; phi u4 = 0.
  expect_matrix(inv.psi, {{"-1", "0", "0", "0"}, {"0", "-1", "0", "0"}, {"0", "0", "-1", "0"}, {"-1", "-1", "0", "0"}});
  expect_vector(inv.xi_star.components(), {"0", "0", "0", "-1"}, imm.params());
  expect_vector(inv.eta_star.components(), {"-1", "-1", "0", "1"}, imm.params());
  EXPECT_TRUE(find_entry(inv.report, "5.8").holds);
  EXPECT_TRUE(inv.report.passed());

  const geo::TensorField user = geo::TensorField::vector(lps::testing::r5(), lps::testing::exprs({"1", "-1", "0", "0", "0"}));
  const auto zero = geo::Connection::zero(lps::testing::r5());
  const auto asserted = hyp::verify_affine_case(imm, ac, zero, hyp::TransversalChoice::user(user), nullptr, {},
                                                hyp::AffineMode::Assert);
  EXPECT_TRUE(asserted.passed());
  EXPECT_EQ(find_entry(asserted, "4.2-h").kind, geo::EntryKind::Identity);
  const auto automatic = hyp::verify_affine_case(imm, ac, zero, hyp::TransversalChoice::user(user));
  EXPECT_EQ(find_entry(automatic, "4.2-h").kind, geo::EntryKind::Finding);
}

TEST(Example62, InvariantTransversal) {
  const auto lap = lps::testing::structure_62();
  const auto imm = lps::testing::immersion(lps::testing::r5(), {"x", "y", "z", "t"}, {"x", "y", "z", "t", "x"});
  EXPECT_EQ(hyp::classify_invariance(imm, lap.ac()).tag, InvarianceTag::InvariantTransversalXi);
  const auto d = hyp::phi_decompose(imm, lap.ac(), imm.pull(lap.ac().xi()));
  expect_matrix(d.J, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}});
  for (const auto& a : d.alpha.components()) EXPECT_TRUE(a.is_zero());
  // xi = -(u1 - N)/2 with u1 = d_x + d_s and N = d_x - d_s.
  const auto xi = imm.pull(lap.ac().xi());
  const auto u1 = hyp::tangent_frame(imm)[0];
  const std::vector<int> normal{1, 0, 0, 0, -1};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(xi[k], canon("-1/2") * (u1[k] - normal[k]));
}

TEST(Errors, DegenerateAndNullHypersurfaces) {
  const auto lap = lps::testing::structure_63();
  const auto flat = lps::testing::immersion(lps::testing::r3(), {"x", "y"}, {"x", "x", "0"});
  EXPECT_THROW(hyp::tangent_frame(flat), hyp::HypersurfaceError);
  // z = x is null for diag(1, 1, -1).
  const auto null = lps::testing::immersion(lps::testing::r3(), {"x", "y"}, {"x", "y", "x"});
  EXPECT_THROW(hyp::metric_normal(null, lap.metric()), hyp::HypersurfaceError);
  EXPECT_THROW(hyp::Immersion(geo::Chart({"x"}), lps::testing::r3(), lps::testing::exprs({"x", "0", "0"})),
               geo::GeometryError);
}

}  // namespace
