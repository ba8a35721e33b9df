#include "lps/geometry/linalg.hpp"
#include "lps/geometry/operators.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

namespace {

using lps::geo::Chart;
using lps::geo::Expr;
using lps::geo::TensorField;
using lps::testing::canon;

TensorField vec(const Chart& c, std::vector<std::string> comps) {
  std::vector<Expr> v;
  for (const auto& s : comps) v.push_back(canon(s));
  return TensorField::vector(c, v);
}

TensorField form(const Chart& c, std::vector<std::string> comps) {
  std::vector<Expr> v;
  for (const auto& s : comps) v.push_back(canon(s));
  return TensorField::one_form(c, v);
}

TensorField mat(const Chart& c, int up, int down, std::vector<std::vector<std::string>> rows) {
  lps::geo::Matrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const auto& s : r) m.back().push_back(canon(s));
  }
  return TensorField::from_matrix(c, up, down, m);
}

const Chart xy({"x", "y"});

TEST(Tensor, StorageIsContravariantFirst) {
  const TensorField t = mat(xy, 1, 1, {{"1", "2"}, {"3", "4"}});
  EXPECT_EQ(t.at(0, 1), Expr(2));
  const TensorField col = lps::geo::apply(t, lps::geo::basis_vector(xy, 1));
  EXPECT_EQ(col.at(0), Expr(2));
  EXPECT_EQ(col.at(1), Expr(4));
}

TEST(Tensor, ComposeAndPullback) {
  const TensorField a = mat(xy, 1, 1, {{"0", "1"}, {"1", "0"}});
  const TensorField b = mat(xy, 1, 1, {{"x", "0"}, {"0", "y"}});
  const TensorField ab = lps::geo::compose(a, b);
  EXPECT_EQ(ab.matrix(), mat(xy, 1, 1, {{"0", "y"}, {"x", "0"}}).matrix());
  const TensorField beta = form(xy, {"1", "2"});
  const TensorField pb = lps::geo::pullback(beta, b);
  EXPECT_EQ(pb.at(0), canon("x"));
  EXPECT_EQ(pb.at(1), canon("2*y"));
  EXPECT_EQ(lps::geo::contract(beta, vec(xy, {"y", "x"})), canon("y + 2*x"));
}

TEST(Tensor, EvaluateAndLower) {
  const TensorField g = mat(xy, 0, 2, {{"1", "x"}, {"x", "2"}});
  const TensorField u = vec(xy, {"1", "1"});
  EXPECT_EQ(lps::geo::evaluate(g, u, u), canon("3 + 2*x"));
  const TensorField flat = lps::geo::lower(g, u);
  EXPECT_EQ(flat.at(0), canon("1 + x"));
  EXPECT_EQ(flat.at(1), canon("x + 2"));
}

TEST(Tensor, ShapeChecks) {
  EXPECT_THROW(TensorField(xy, 1, 1, {Expr(1), Expr(2), Expr(3)}), lps::geo::DimensionError);
  const Chart other({"u", "v"});
  EXPECT_THROW(lps::geo::compose(mat(xy, 1, 1, {{"1", "0"}, {"0", "1"}}), TensorField::identity(other)),
               lps::geo::ChartMismatch);
  EXPECT_THROW(xy.index_of("z"), lps::geo::GeometryError);
}

TEST(Operators, LieBracketOfRotationGenerators) {
  // X = x d_y, Y = y d_x: X(Y) = x d_x, Y(X) = y d_y.
  const TensorField b = lps::geo::lie_bracket(vec(xy, {"0", "x"}), vec(xy, {"y", "0"}));
  EXPECT_EQ(b.at(0), canon("x"));
  EXPECT_EQ(b.at(1), canon("-y"));
}

TEST(Operators, ExteriorDerivativeHasNoHalf) {
  const TensorField d = lps::geo::exterior_derivative_1form(form(xy, {"0", "x"}));
  EXPECT_EQ(d.at(0, 1), Expr(1));
  EXPECT_EQ(d.at(1, 0), Expr(-1));
  const TensorField w = lps::geo::wedge_1forms(form(xy, {"1", "0"}), form(xy, {"0", "1"}));
  EXPECT_EQ(w.components(), d.components());
}

TEST(Operators, LieDerivativeAlongCoordinateField) {
  const TensorField t = mat(xy, 1, 1, {{"x^2", "y"}, {"x*y", "1"}});
  const TensorField l = lps::geo::lie_derivative(lps::geo::basis_vector(xy, 0), t);
  EXPECT_EQ(l.matrix(), mat(xy, 1, 1, {{"2*x", "0"}, {"y", "0"}}).matrix());
}

TEST(Linalg, SymbolicSolveSatisfiesSystem) {
  const lps::geo::Matrix a = {{canon("1"), canon("x")}, {canon("y"), canon("2")}};
  const lps::geo::Matrix b = {{canon("1")}, {canon("exp(x)")}};
  const auto probes = lps::geo::sample_points(xy, {});
  const lps::geo::Matrix sol = lps::geo::solve(a, b, probes);
  for (std::size_t i = 0; i < 2; ++i) {
    const Expr residual = a[i][0] * sol[0][0] + a[i][1] * sol[1][0] - b[i][0];
    EXPECT_TRUE(lps::sym::exprs_equivalent(residual, Expr(0), xy.domain())) << residual.str();
  }
}

TEST(Linalg, SingularSystemThrows) {
  const lps::geo::Matrix a = {{canon("x"), canon("2*x")}, {canon("1"), canon("2")}};
  const lps::geo::Matrix b = {{canon("1")}, {canon("1")}};
  EXPECT_THROW(lps::geo::solve(a, b, lps::geo::sample_points(xy, {})), lps::geo::SingularError);
}

TEST(Linalg, RankAndSpanResidual) {
  Eigen::MatrixXd m(3, 2);
  m << 1, 0, 0, 1, 1, 1;
  EXPECT_EQ(lps::geo::matrix_rank(m, 1e-9), 2);
  EXPECT_LT(lps::geo::span_residual(m, Eigen::Vector3d(2, 3, 5)), 1e-12);
  EXPECT_GT(lps::geo::span_residual(m, Eigen::Vector3d(0, 0, 1)), 0.1);
}

TEST(Check, SymbolicSampledAndWitness) {
  const lps::geo::CheckConfig cfg;
  const auto exact = lps::geo::check_identity("a", "x + x = 2x", {{canon("x + x"), canon("2*x"), "c"}}, xy, cfg);
  EXPECT_TRUE(exact.holds);
  EXPECT_TRUE(exact.symbolic);
  const auto trig =
      lps::geo::check_identity("b", "pythagoras", {{canon("sin(x)^2 + cos(x)^2"), Expr(1), "c"}}, xy, cfg);
  EXPECT_TRUE(trig.holds);
  EXPECT_FALSE(trig.symbolic);
  EXPECT_LT(trig.max_residual, 1e-12);
  const auto wrong = lps::geo::check_identity("c", "x = y", {{canon("x"), canon("y"), "component 0"}}, xy, cfg);
  EXPECT_FALSE(wrong.holds);
  EXPECT_FALSE(wrong.ok());
  EXPECT_NE(wrong.witness.find("component 0"), std::string::npos);
  const auto finding = lps::geo::check_identity("d", "x = y", {{canon("x"), canon("y"), "c"}}, xy, cfg,
                                                lps::geo::EntryKind::Finding);
  EXPECT_FALSE(finding.holds);
  EXPECT_TRUE(finding.ok());
}

TEST(Check, SamplePointsAreSeeded) {
  const Chart c({"x", "y"}, lps::sym::DomainBox({{"x", {0.5, 2.0}}}));
  lps::geo::CheckConfig cfg;
  const auto a = lps::geo::sample_points(c, cfg);
  EXPECT_EQ(a.size(), 20u);
  EXPECT_EQ(a, lps::geo::sample_points(c, cfg));
  for (const auto& p : a) EXPECT_GT(p.at("x"), 0.5);
  cfg.seed = 43;
  EXPECT_NE(a, lps::geo::sample_points(c, cfg));
}

}  // namespace
