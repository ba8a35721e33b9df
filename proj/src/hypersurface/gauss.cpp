#include "lps/hypersurface/gauss.hpp"

namespace lps::hyp {

namespace {

std::vector<Expr> pulled_gamma(const Immersion& i, const Connection& ambient) {
  std::vector<Expr> out;
  out.reserve(ambient.coefficients().size());
  for (const auto& c : ambient.coefficients()) out.push_back(c.is_zero() ? c : i.pull(c));
  return out;
}

AlongField along(const Immersion& i, const std::vector<Expr>& gamma, const AlongField& ua, std::size_t a,
                 const AlongField& v) {
  const std::size_t n = v.size();
  const std::string& p = i.params().coords()[a];
  AlongField out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Expr> terms{sym::diff(v[k], p)};
    for (std::size_t r = 0; r < n; ++r) {
      if (ua[r].is_zero()) continue;
      for (std::size_t s = 0; s < n; ++s) {
        const Expr& g = gamma[(k * n + r) * n + s];
        if (g.is_zero() || v[s].is_zero()) continue;
        terms.push_back(g * ua[r] * v[s]);
      }
    }
    out[k] = sym::sum(terms);
  }
  return out;
}

}  // namespace

AlongField covariant_along(const Immersion& i, const Connection& ambient, std::size_t a, const AlongField& v) {
  geo::require_same_chart(ambient.chart(), i.ambient());
  AlongField ua(i.ambient().dim());
  for (std::size_t k = 0; k < ua.size(); ++k) ua[k] = sym::diff(i.map()[k], i.params().coords().at(a));
  return along(i, pulled_gamma(i, ambient), ua, a, v);
}

GaussWeingarten gauss_weingarten(const Immersion& i, const Connection& ambient, const AlongField& t,
                                 const CheckConfig& cfg) {
  geo::require_same_chart(ambient.chart(), i.ambient());
  const auto frame = tangent_frame(i, cfg);
  const std::size_t m = frame.size();
  const std::size_t n = m + 1;
  const auto gamma = pulled_gamma(i, ambient);

  Matrix rhs(n, std::vector<Expr>(m * m + m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const AlongField v = along(i, gamma, frame[a], a, frame[b]);
      for (std::size_t k = 0; k < n; ++k) rhs[k][a * m + b] = v[k];
    }
    const AlongField v = along(i, gamma, frame[a], a, t);
    for (std::size_t k = 0; k < n; ++k) rhs[k][m * m + a] = v[k];
  }
  const Matrix c = decompose_in_basis(i.params(), frame_matrix(frame, &t), rhs, cfg, "gauss_weingarten");

  std::vector<Expr> coeffs(m * m * m);
  Matrix h(m, std::vector<Expr>(m));
  Matrix a_op(m, std::vector<Expr>(m));
  std::vector<Expr> w(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t cc = 0; cc < m; ++cc) coeffs[(cc * m + a) * m + b] = c[cc][a * m + b];
      h[a][b] = c[m][a * m + b];
      a_op[b][a] = -c[b][m * m + a];
    }
    w[a] = c[m][m * m + a];
  }
  return GaussWeingarten{
      Connection(i.params(), std::move(coeffs), false),
      TensorField::from_matrix(i.params(), 0, 2, h),
      TensorField::from_matrix(i.params(), 1, 1, a_op),
      TensorField::one_form(i.params(), std::move(w)),
      t,
  };
}

CheckEntry h_symmetry_entry(const GaussWeingarten& gw, const CheckConfig& cfg) {
  const Chart& params = gw.h.chart();
  std::vector<geo::ExprPair> pairs;
  for (std::size_t a = 0; a < params.dim(); ++a) {
    for (std::size_t b = a + 1; b < params.dim(); ++b) {
      pairs.push_back({gw.h.at(a, b), gw.h.at(b, a), "h(u" + std::to_string(a + 1) + ", u" + std::to_string(b + 1) + ")"});
    }
  }
  return geo::check_identity("h-symmetric", "h(X, Y) = h(Y, X)", pairs, params, cfg);
}

}  // namespace lps::hyp
