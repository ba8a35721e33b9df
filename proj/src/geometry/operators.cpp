#include "lps/geometry/operators.hpp"

#include "lps/geometry/linalg.hpp"

namespace lps::geo {

namespace {

std::vector<std::size_t> digits(std::size_t flat, std::size_t n, int count) {
  std::vector<std::size_t> d(static_cast<std::size_t>(count));
  for (int i = count - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = flat % n;
    flat /= n;
  }
  return d;
}

std::size_t flatten(const std::vector<std::size_t>& d, std::size_t n) {
  std::size_t flat = 0;
  for (auto x : d) flat = flat * n + x;
  return flat;
}

const std::string& coord(const TensorField& t, std::size_t i) { return t.chart().coords()[i]; }

}  // namespace

TensorField lie_bracket(const TensorField& x, const TensorField& y) {
  require_same_chart(x.chart(), y.chart());
  require_signature(x, 1, 0, "lie_bracket");
  require_signature(y, 1, 0, "lie_bracket");
  const std::size_t n = x.dim();
  std::vector<Expr> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = directional(x, y.at(k)) - directional(y, x.at(k));
  return TensorField::vector(x.chart(), std::move(out));
}

Connection levi_civita(const MetricField& g) {
  const Chart& chart = g.chart();
  const std::size_t n = chart.dim();
  // dg[l][i][j] = d_l g_ij
  std::vector<Expr> dg(n * n * n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dg[(l * n + i) * n + j] = sym::diff(g.at(i, j), chart.coords()[l]);
    }
  }
  auto d = [&](std::size_t l, std::size_t i, std::size_t j) -> const Expr& {
    return dg[(l * n + i) * n + j];
  };
  std::vector<Expr> gamma(n * n * n);
  const Expr half(sym::Rational(1, 2));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        std::vector<Expr> terms;
        for (std::size_t l = 0; l < n; ++l) {
          if (g.inverse(k, l).is_zero()) continue;
          terms.push_back(g.inverse(k, l) * (d(i, j, l) + d(j, i, l) - d(l, i, j)));
        }
        const Expr c = half * sym::sum(terms);
        gamma[(k * n + i) * n + j] = c;
        gamma[(k * n + j) * n + i] = c;
      }
    }
  }
  return Connection(chart, std::move(gamma), true);
}

TensorField covariant_derivative(const Connection& nabla, const TensorField& t,
                                 const TensorField& x) {
  require_same_chart(nabla.chart(), t.chart());
  require_same_chart(nabla.chart(), x.chart());
  require_signature(x, 1, 0, "covariant_derivative direction");
  const bool supported = t.has_signature(1, 0) || t.has_signature(0, 1) || t.has_signature(0, 2) ||
                         t.has_signature(1, 1);
  if (!supported) {
    throw UnsupportedSignature("covariant_derivative supports (1,0), (0,1), (0,2) and (1,1); got (" +
                               std::to_string(t.up()) + "," + std::to_string(t.down()) + ")");
  }
  const std::size_t n = t.dim();
  std::vector<Expr> out(t.components().size());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto idx = digits(flat, n, t.rank());
    std::vector<Expr> terms{directional(x, t[flat])};
    for (int s = 0; s < t.rank(); ++s) {
      const bool contravariant = s < t.up();
      const auto slot = static_cast<std::size_t>(s);
      for (std::size_t i = 0; i < n; ++i) {
        if (x.at(i).is_zero()) continue;
        for (std::size_t m = 0; m < n; ++m) {
          auto other = idx;
          other[slot] = m;
          const Expr& comp = t[flatten(other, n)];
          if (comp.is_zero()) continue;
          if (contravariant) {
            const Expr& g = nabla.gamma(idx[slot], i, m);
            if (!g.is_zero()) terms.push_back(g * x.at(i) * comp);
          } else {
            const Expr& g = nabla.gamma(m, i, idx[slot]);
            if (!g.is_zero()) terms.push_back(-(g * x.at(i) * comp));
          }
        }
      }
    }
    out[flat] = sym::sum(terms);
  }
  return TensorField(t.chart(), t.up(), t.down(), std::move(out));
}

TensorField lie_derivative(const TensorField& x, const TensorField& t) {
  require_same_chart(x.chart(), t.chart());
  require_signature(x, 1, 0, "lie_derivative direction");
  const std::size_t n = t.dim();
  if (t.has_signature(0, 1)) {
    std::vector<Expr> out(n);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Expr> terms{directional(x, t.at(b))};
      for (std::size_t i = 0; i < n; ++i) terms.push_back(t.at(i) * sym::diff(x.at(i), coord(t, b)));
      out[b] = sym::sum(terms);
    }
    return TensorField::one_form(t.chart(), std::move(out));
  }
  if (t.has_signature(1, 1)) {
    TensorField out = TensorField::zero(t.chart(), 1, 1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<Expr> terms{directional(x, t.at(a, b))};
        for (std::size_t i = 0; i < n; ++i) {
          terms.push_back(-(t.at(i, b) * sym::diff(x.at(a), coord(t, i))));
          terms.push_back(t.at(a, i) * sym::diff(x.at(i), coord(t, b)));
        }
        out.at(a, b) = sym::sum(terms);
      }
    }
    return out;
  }
  throw UnsupportedSignature("lie_derivative supports (1,1) and (0,1); got (" +
                             std::to_string(t.up()) + "," + std::to_string(t.down()) + ")");
}

TensorField exterior_derivative_1form(const TensorField& beta) {
  require_signature(beta, 0, 1, "exterior_derivative_1form");
  const std::size_t n = beta.dim();
  TensorField out = TensorField::zero(beta.chart(), 0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.at(i, j) = sym::diff(beta.at(j), coord(beta, i)) - sym::diff(beta.at(i), coord(beta, j));
    }
  }
  return out;
}

TensorField wedge_1forms(const TensorField& beta, const TensorField& gamma) {
  require_same_chart(beta.chart(), gamma.chart());
  require_signature(beta, 0, 1, "wedge_1forms");
  require_signature(gamma, 0, 1, "wedge_1forms");
  const std::size_t n = beta.dim();
  TensorField out = TensorField::zero(beta.chart(), 0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = beta.at(i) * gamma.at(j) - beta.at(j) * gamma.at(i);
    }
  }
  return out;
}

int numerical_rank(const TensorField& t, const sym::SamplePoint& p, double tol) {
  if (t.rank() != 2) throw UnsupportedSignature("numerical_rank needs a square component matrix");
  return matrix_rank(evaluate(t.matrix(), p), tol);
}

}  // namespace lps::geo
