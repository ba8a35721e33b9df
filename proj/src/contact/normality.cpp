#include "lps/contact/normality.hpp"

#include "lps/geometry/operators.hpp"

namespace lps::contact {

namespace {

void store(TensorField& s, std::size_t i, std::size_t j, const TensorField& v) {
  const std::size_t n = s.dim();
  for (std::size_t k = 0; k < n; ++k) s[(k * n + i) * n + j] = v.at(k);
}

TensorField column(const TensorField& phi, std::size_t j) {
  std::vector<Expr> c(phi.dim());
  for (std::size_t i = 0; i < phi.dim(); ++i) c[i] = phi.at(i, j);
  return TensorField::vector(phi.chart(), std::move(c));
}

}  // namespace

TensorField nijenhuis(const TensorField& phi) {
  geo::require_signature(phi, 1, 1, "nijenhuis");
  const std::size_t n = phi.dim();
  TensorField out = TensorField::zero(phi.chart(), 1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const TensorField x = geo::basis_vector(phi.chart(), i);
    const TensorField px = column(phi, i);
    for (std::size_t j = 0; j < n; ++j) {
      const TensorField y = geo::basis_vector(phi.chart(), j);
      const TensorField py = column(phi, j);
      // [d_i, d_j] = 0, so the phi^2 term drops out.
      const TensorField v = geo::lie_bracket(px, py) - geo::apply(phi, geo::lie_bracket(px, y)) -
                            geo::apply(phi, geo::lie_bracket(x, py));
      store(out, i, j, v);
    }
  }
  return out;
}

TensorField normality_tensor(const AcStructure& s) {
  const TensorField d_eta = geo::exterior_derivative_1form(s.eta());
  return nijenhuis(s.phi()) + geo::tensor_product(s.xi(), d_eta);
}

TensorField normality_tensor(const AcStructure& s, const Connection& nabla) {
  if (!nabla.torsion_free()) throw geo::GeometryError("bracket-free normality form needs a torsion-free connection");
  const TensorField& phi = s.phi();
  const std::size_t n = s.dim();
  const Chart& chart = s.chart();

  std::vector<TensorField> d_phi;  // nabla_{d_i} phi
  std::vector<TensorField> d_eta;  // nabla_{d_i} eta
  std::vector<TensorField> d_phi_along_phi;  // nabla_{phi d_i} phi
  for (std::size_t i = 0; i < n; ++i) {
    d_phi.push_back(geo::covariant_derivative(nabla, phi, geo::basis_vector(chart, i)));
    d_eta.push_back(geo::covariant_derivative(nabla, s.eta(), geo::basis_vector(chart, i)));
    d_phi_along_phi.push_back(geo::covariant_derivative(nabla, phi, column(phi, i)));
  }

  TensorField out = TensorField::zero(chart, 1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const TensorField x = geo::basis_vector(chart, i);
    for (std::size_t j = 0; j < n; ++j) {
      const TensorField y = geo::basis_vector(chart, j);
      const Expr deta = d_eta[i].at(j) - d_eta[j].at(i);
      const TensorField v = geo::apply(d_phi_along_phi[i], y) - geo::apply(d_phi_along_phi[j], x) +
                            geo::apply(phi, geo::apply(d_phi[j], x)) -
                            geo::apply(phi, geo::apply(d_phi[i], y)) + deta * s.xi();
      store(out, i, j, v);
    }
  }
  return out;
}

geo::CheckEntry normality_entry(const AcStructure& s, const CheckConfig& cfg, std::string id) {
  const TensorField tensor = normality_tensor(s);
  const auto& c = s.chart().coords();
  const std::size_t n = s.dim();
  std::vector<geo::ExprPair> pairs;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        pairs.push_back({tensor.at(k, i, j), Expr(0), "S(d_" + c[i] + ",d_" + c[j] + ")^" + c[k]});
      }
    }
  }
  return geo::check_identity(std::move(id), "[phi,phi] + d eta (x) xi = 0", pairs, s.chart(), cfg);
}

}  // namespace lps::contact
