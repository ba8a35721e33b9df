#include "lps/geometry/tensor.hpp"

namespace lps::geo {

namespace {

std::size_t ipow(std::size_t n, int k) {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i) out *= n;
  return out;
}

// Base-n digits of a flat index, most significant first.
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

}  // namespace

TensorField::TensorField(Chart chart, int up, int down, std::vector<Expr> components)
    : chart_(std::move(chart)), up_(up), down_(down), components_(std::move(components)) {
  if (up < 0 || down < 0) throw DimensionError("negative tensor rank");
  const std::size_t expected = ipow(chart_.dim(), up + down);
  if (components_.size() != expected) {
    throw DimensionError("(" + std::to_string(up) + "," + std::to_string(down) + ") tensor on a " +
                         std::to_string(chart_.dim()) + "-dimensional chart needs " +
                         std::to_string(expected) + " components, got " +
                         std::to_string(components_.size()));
  }
  for (auto& c : components_) c = sym::simplify(c);
}

TensorField TensorField::zero(const Chart& chart, int up, int down) {
  return TensorField(chart, up, down, std::vector<Expr>(ipow(chart.dim(), up + down)));
}

TensorField TensorField::identity(const Chart& chart) {
  TensorField t = zero(chart, 1, 1);
  for (std::size_t i = 0; i < chart.dim(); ++i) t.at(i, i) = Expr(1);
  return t;
}

TensorField TensorField::vector(const Chart& chart, std::vector<Expr> components) {
  return TensorField(chart, 1, 0, std::move(components));
}

TensorField TensorField::one_form(const Chart& chart, std::vector<Expr> components) {
  return TensorField(chart, 0, 1, std::move(components));
}

TensorField TensorField::from_matrix(const Chart& chart, int up, int down, const Matrix& rows) {
  if (up + down != 2) throw DimensionError("from_matrix needs a rank-2 signature");
  const std::size_t n = chart.dim();
  if (rows.size() != n) throw DimensionError("matrix must have " + std::to_string(n) + " rows");
  std::vector<Expr> comps;
  comps.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("matrix row must have " + std::to_string(n) + " entries");
    comps.insert(comps.end(), r.begin(), r.end());
  }
  return TensorField(chart, up, down, std::move(comps));
}

Matrix TensorField::matrix() const {
  if (rank() != 2) throw DimensionError("matrix() needs a rank-2 tensor");
  const std::size_t n = dim();
  Matrix m(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = at(i, j);
  }
  return m;
}

void require_signature(const TensorField& t, int up, int down, const char* what) {
  if (!t.has_signature(up, down)) {
    throw UnsupportedSignature(std::string(what) + " expects a (" + std::to_string(up) + "," +
                               std::to_string(down) + ") tensor, got (" + std::to_string(t.up()) +
                               "," + std::to_string(t.down()) + ")");
  }
}

TensorField operator+(const TensorField& a, const TensorField& b) {
  require_same_chart(a.chart(), b.chart());
  require_signature(b, a.up(), a.down(), "tensor addition");
  std::vector<Expr> c(a.components().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return TensorField(a.chart(), a.up(), a.down(), std::move(c));
}

TensorField operator-(const TensorField& a, const TensorField& b) {
  require_same_chart(a.chart(), b.chart());
  require_signature(b, a.up(), a.down(), "tensor subtraction");
  std::vector<Expr> c(a.components().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return TensorField(a.chart(), a.up(), a.down(), std::move(c));
}

TensorField operator*(const Expr& f, const TensorField& t) {
  std::vector<Expr> c(t.components().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f * t[i];
  return TensorField(t.chart(), t.up(), t.down(), std::move(c));
}

TensorField apply(const TensorField& t, const TensorField& x) {
  require_same_chart(t.chart(), x.chart());
  require_signature(t, 1, 1, "apply");
  require_signature(x, 1, 0, "apply");
  const std::size_t n = t.dim();
  std::vector<Expr> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Expr> terms;
    for (std::size_t j = 0; j < n; ++j) terms.push_back(t.at(i, j) * x.at(j));
    out[i] = sym::sum(terms);
  }
  return TensorField::vector(t.chart(), std::move(out));
}

TensorField compose(const TensorField& a, const TensorField& b) {
  require_same_chart(a.chart(), b.chart());
  require_signature(a, 1, 1, "compose");
  require_signature(b, 1, 1, "compose");
  const std::size_t n = a.dim();
  TensorField out = TensorField::zero(a.chart(), 1, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < n; ++k) terms.push_back(a.at(i, k) * b.at(k, j));
      out.at(i, j) = sym::sum(terms);
    }
  }
  return out;
}

TensorField pullback(const TensorField& beta, const TensorField& t) {
  require_same_chart(beta.chart(), t.chart());
  require_signature(beta, 0, 1, "pullback");
  require_signature(t, 1, 1, "pullback");
  const std::size_t n = t.dim();
  std::vector<Expr> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back(beta.at(i) * t.at(i, j));
    out[j] = sym::sum(terms);
  }
  return TensorField::one_form(t.chart(), std::move(out));
}

Expr contract(const TensorField& beta, const TensorField& x) {
  require_same_chart(beta.chart(), x.chart());
  require_signature(beta, 0, 1, "contract");
  require_signature(x, 1, 0, "contract");
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < x.dim(); ++i) terms.push_back(beta.at(i) * x.at(i));
  return sym::sum(terms);
}

Expr evaluate(const TensorField& b, const TensorField& x, const TensorField& y) {
  require_same_chart(b.chart(), x.chart());
  require_same_chart(b.chart(), y.chart());
  require_signature(b, 0, 2, "evaluate");
  require_signature(x, 1, 0, "evaluate");
  require_signature(y, 1, 0, "evaluate");
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) terms.push_back(b.at(i, j) * x.at(i) * y.at(j));
  }
  return sym::sum(terms);
}

TensorField evaluate_vector(const TensorField& s, const TensorField& x, const TensorField& y) {
  require_same_chart(s.chart(), x.chart());
  require_same_chart(s.chart(), y.chart());
  require_signature(s, 1, 2, "evaluate_vector");
  const std::size_t n = s.dim();
  std::vector<Expr> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) terms.push_back(s.at(k, i, j) * x.at(i) * y.at(j));
    }
    out[k] = sym::sum(terms);
  }
  return TensorField::vector(s.chart(), std::move(out));
}

TensorField lower(const TensorField& g, const TensorField& x) {
  require_same_chart(g.chart(), x.chart());
  require_signature(g, 0, 2, "lower");
  require_signature(x, 1, 0, "lower");
  const std::size_t n = g.dim();
  std::vector<Expr> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Expr> terms;
    for (std::size_t j = 0; j < n; ++j) terms.push_back(g.at(i, j) * x.at(j));
    out[i] = sym::sum(terms);
  }
  return TensorField::one_form(g.chart(), std::move(out));
}

TensorField tensor_product(const TensorField& a, const TensorField& b) {
  require_same_chart(a.chart(), b.chart());
  const std::size_t n = a.dim();
  const int up = a.up() + b.up();
  const int down = a.down() + b.down();
  std::vector<Expr> out(ipow(n, up + down));
  for (std::size_t fa = 0; fa < a.components().size(); ++fa) {
    const auto da = digits(fa, n, a.rank());
    for (std::size_t fb = 0; fb < b.components().size(); ++fb) {
      const auto db = digits(fb, n, b.rank());
      std::vector<std::size_t> d;
      d.insert(d.end(), da.begin(), da.begin() + a.up());
      d.insert(d.end(), db.begin(), db.begin() + b.up());
      d.insert(d.end(), da.begin() + a.up(), da.end());
      d.insert(d.end(), db.begin() + b.up(), db.end());
      out[flatten(d, n)] = a[fa] * b[fb];
    }
  }
  return TensorField(a.chart(), up, down, std::move(out));
}

TensorField basis_vector(const Chart& chart, std::size_t i) {
  std::vector<Expr> c(chart.dim());
  c.at(i) = Expr(1);
  return TensorField::vector(chart, std::move(c));
}

Expr directional(const TensorField& x, const Expr& f) {
  require_signature(x, 1, 0, "directional");
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x.at(i).is_zero()) continue;
    terms.push_back(x.at(i) * sym::diff(f, x.chart().coords()[i]));
  }
  return sym::sum(terms);
}

TensorField substitute(const TensorField& t,
                       const std::vector<std::pair<std::string, Expr>>& bindings) {
  std::vector<Expr> c(t.components().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sym::substitute(t[i], bindings);
  return TensorField(t.chart(), t.up(), t.down(), std::move(c));
}

}  // namespace lps::geo
