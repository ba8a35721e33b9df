#include "lps/geometry/operators.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

namespace {

using lps::geo::Chart;
using lps::geo::Expr;
using lps::geo::MetricField;
using lps::geo::TensorField;
using lps::testing::canon;

MetricField metric(const Chart& c, std::vector<std::vector<std::string>> rows) {
  lps::geo::Matrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (const auto& s : r) m.back().push_back(canon(s));
  }
  return MetricField(TensorField::from_matrix(c, 0, 2, m));
}

// Christoffel symbols from central differences of g at one point.
std::vector<double> numeric_christoffel(const MetricField& g, const lps::sym::SamplePoint& p) {
  const auto& coords = g.chart().coords();
  const std::size_t n = coords.size();
  const double h = 1e-5;
  auto g_at = [&](const lps::sym::SamplePoint& q) {
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = lps::sym::eval(g.at(i, j), q);
    return m;
  };
  std::vector<Eigen::MatrixXd> dg;
  for (std::size_t l = 0; l < n; ++l) {
    auto plus = p, minus = p;
    plus.set(coords[l], p.at(coords[l]) + h);
    minus.set(coords[l], p.at(coords[l]) - h);
    dg.push_back((g_at(plus) - g_at(minus)) / (2 * h));
  }
  const Eigen::MatrixXd inv = g_at(p).inverse();
  std::vector<double> out(n * n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t l = 0; l < n; ++l) s += inv(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
        out[(k * n + i) * n + j] = s / 2;
      }
  return out;
}

TEST(Metric, RejectsAsymmetricAndSingular) {
  const Chart c({"x", "y"});
  EXPECT_THROW(metric(c, {{"1", "x"}, {"0", "1"}}), lps::geo::GeometryError);
  EXPECT_THROW(metric(c, {{"1", "1"}, {"1", "1"}}), lps::geo::SingularError);
}

TEST(Metric, SignatureAndInverse) {
  const Chart c({"x", "y", "z"});
  const MetricField lor = metric(c, {{"exp(-2*z)", "0", "0"}, {"0", "exp(2*z)", "0"}, {"0", "0", "-1"}});
  EXPECT_EQ(lor.signature(), lps::geo::Signature::Lorentzian);
  EXPECT_EQ(lor.inverse(0, 0), canon("exp(2*z)"));
  EXPECT_EQ(metric(c, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}).signature(), lps::geo::Signature::Riemannian);
  EXPECT_EQ(metric(c, {{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "-1"}}).signature(), lps::geo::Signature::Other);
}

TEST(LeviCivita, PolarCoordinates) {
  const Chart c({"r", "t"}, lps::sym::DomainBox({{"r", {0.5, 2.0}}}));
  const auto nabla = lps::geo::levi_civita(metric(c, {{"1", "0"}, {"0", "r^2"}}));
  EXPECT_EQ(nabla.gamma(0, 1, 1), canon("-r"));
  EXPECT_EQ(nabla.gamma(1, 0, 1), canon("1/r"));
  EXPECT_EQ(nabla.gamma(1, 1, 0), canon("1/r"));
  EXPECT_TRUE(nabla.gamma(0, 0, 0).is_zero());
  EXPECT_TRUE(nabla.torsion_free());
}

TEST(LeviCivita, MatchesFiniteDifferenceChristoffel) {
  const Chart c({"x", "y", "z"});
  const MetricField g = metric(c, {{"exp(-2*z)", "0", "0"}, {"0", "exp(2*z)", "0"}, {"0", "0", "-1"}});
  const auto nabla = lps::geo::levi_civita(g);
  for (const auto& p : lps::geo::sample_points(c, {})) {
    const auto oracle = numeric_christoffel(g, p);
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      EXPECT_NEAR(lps::sym::eval(nabla.coefficients()[k], p), oracle[k], 1e-6) << k;
    }
  }
}

TEST(Connection, TorsionFreeRequiresSymmetry) {
  const Chart c({"x", "y"});
  std::vector<Expr> gamma(8, Expr(0));
  gamma[1] = Expr(1);  // Gamma^x_xy
  EXPECT_THROW(lps::geo::Connection(c, gamma, true), lps::geo::GeometryError);
  EXPECT_NO_THROW(lps::geo::Connection(c, gamma, false));
  EXPECT_THROW(lps::geo::Connection(c, std::vector<Expr>(7), false), lps::geo::DimensionError);
}

TEST(CovariantDerivative, ZeroConnectionIsDirectional) {
  const Chart c({"x", "y"});
  const TensorField v = TensorField::vector(c, {canon("x*y"), canon("sin(x)")});
  const TensorField d = lps::geo::covariant_derivative(lps::geo::Connection::zero(c), v, lps::geo::basis_vector(c, 0));
  EXPECT_EQ(d.at(0), canon("y"));
  EXPECT_EQ(d.at(1), canon("cos(x)"));
}

TEST(CovariantDerivative, PolarRadialField) {
  // nabla_{d_t} d_r = (1/r) d_t in polar coordinates.
  const Chart c({"r", "t"}, lps::sym::DomainBox({{"r", {0.5, 2.0}}}));
  const auto nabla = lps::geo::levi_civita(metric(c, {{"1", "0"}, {"0", "r^2"}}));
  const TensorField d = lps::geo::covariant_derivative(nabla, lps::geo::basis_vector(c, 0), lps::geo::basis_vector(c, 1));
  EXPECT_TRUE(d.at(0).is_zero());
  EXPECT_EQ(d.at(1), canon("1/r"));
}

}  // namespace
