#pragma once

#include "lps/geometry/connection.hpp"
#include "lps/geometry/metric.hpp"
#include "lps/geometry/tensor.hpp"

namespace lps::contact {

using geo::Chart;
using geo::CheckConfig;
using geo::Connection;
using geo::Expr;
using geo::MetricField;
using geo::StructureReport;
using geo::TensorField;

class StructureError : public geo::GeometryError {
 public:
  using geo::GeometryError::GeometryError;
};

/// (phi, xi, eta) with signs e1, e2 and a single characteristic field.
/// Construction checks only shapes; the axioms are checked by verify_ac.
class AcStructure {
 public:
  AcStructure(TensorField phi, TensorField xi, TensorField eta, int e1 = 1, int e2 = 1);

  const Chart& chart() const noexcept { return phi_.chart(); }
  std::size_t dim() const noexcept { return phi_.dim(); }
  const TensorField& phi() const noexcept { return phi_; }
  const TensorField& xi() const noexcept { return xi_; }
  const TensorField& eta() const noexcept { return eta_; }
  int e1() const noexcept { return e1_; }
  int e2() const noexcept { return e2_; }

 private:
  TensorField phi_;
  TensorField xi_;
  TensorField eta_;
  int e1_;
  int e2_;
};

/// An AcStructure with e1 = e2 = 1 and a metric. Carries the Levi-Civita
/// connection of g and Phi(X, Y) = g(X, phi Y).
class LapStructure {
 public:
  LapStructure(AcStructure ac, MetricField g);

  const AcStructure& ac() const noexcept { return ac_; }
  const Chart& chart() const noexcept { return ac_.chart(); }
  const MetricField& metric() const noexcept { return g_; }
  const Connection& connection() const noexcept { return nabla_; }
  const TensorField& fundamental_form() const noexcept { return fundamental_; }

 private:
  AcStructure ac_;
  MetricField g_;
  Connection nabla_;
  TensorField fundamental_;
};

}  // namespace lps::contact
