#include "lps/contact/structure.hpp"

#include "lps/geometry/operators.hpp"

namespace lps::contact {

namespace {

TensorField lower_first(const MetricField& g, const TensorField& phi) {
  const std::size_t n = phi.dim();
  TensorField out = TensorField::zero(phi.chart(), 0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < n; ++k) terms.push_back(g.at(i, k) * phi.at(k, j));
      out.at(i, j) = sym::sum(terms);
    }
  }
  return out;
}

}  // namespace

AcStructure::AcStructure(TensorField phi, TensorField xi, TensorField eta, int e1, int e2)
    : phi_(std::move(phi)), xi_(std::move(xi)), eta_(std::move(eta)), e1_(e1), e2_(e2) {
  geo::require_signature(phi_, 1, 1, "phi");
  geo::require_signature(xi_, 1, 0, "xi");
  geo::require_signature(eta_, 0, 1, "eta");
  geo::require_same_chart(phi_.chart(), xi_.chart());
  geo::require_same_chart(phi_.chart(), eta_.chart());
  if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1)) {
    throw StructureError("e1 and e2 must be +1 or -1");
  }
}

LapStructure::LapStructure(AcStructure ac, MetricField g)
    : ac_(std::move(ac)),
      g_(std::move(g)),
      nabla_(geo::levi_civita(g_)),
      fundamental_(lower_first(g_, ac_.phi())) {
  geo::require_same_chart(ac_.chart(), g_.chart());
  if (ac_.e1() != 1 || ac_.e2() != 1) {
    throw StructureError("a Lorentzian almost paracontact structure needs e1 = e2 = 1");
  }
}

}  // namespace lps::contact
