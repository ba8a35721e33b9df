#include "lps/hypersurface/immersion.hpp"

#include "lps/geometry/linalg.hpp"

#include <cmath>

namespace lps::hyp {

namespace {

constexpr double kRankTol = 1e-9;

Expr determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Expr(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::vector<Expr> terms;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Expr> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Expr t = m[0][j] * determinant(minor);
    terms.push_back(j % 2 == 0 ? t : -t);
  }
  return sym::sum(terms);
}

std::vector<Expr> flatten(std::span<const AlongField> fields) {
  std::vector<Expr> out;
  for (const auto& f : fields) out.insert(out.end(), f.begin(), f.end());
  return out;
}

}  // namespace

Immersion::Immersion(Chart params, Chart ambient, std::vector<Expr> map)
    : params_(std::move(params)), ambient_(std::move(ambient)), map_(std::move(map)) {
  if (params_.dim() + 1 != ambient_.dim()) {
    throw geo::DimensionError("immersion: parameter chart must have dimension " +
                              std::to_string(ambient_.dim() - 1));
  }
  if (map_.size() != ambient_.dim()) {
    throw geo::DimensionError("immersion: map needs " + std::to_string(ambient_.dim()) + " components");
  }
  for (auto& m : map_) {
    m = sym::simplify(m);
    for (const auto& s : m.symbols()) {
      bool known = false;
      for (const auto& c : params_.coords()) known = known || c == s;
      if (!known) throw HypersurfaceError("immersion: map uses unknown parameter '" + s + "'");
    }
  }
  for (std::size_t k = 0; k < ambient_.dim(); ++k) bindings_.emplace_back(ambient_.coords()[k], map_[k]);
}

Expr Immersion::pull(const Expr& ambient_expr) const { return sym::substitute(ambient_expr, bindings_); }

AlongField Immersion::pull(const TensorField& ambient_vector) const {
  geo::require_same_chart(ambient_vector.chart(), ambient_);
  geo::require_signature(ambient_vector, 1, 0, "pull");
  AlongField out;
  for (const auto& c : ambient_vector.components()) out.push_back(pull(c));
  return out;
}

Matrix Immersion::pull_matrix(const TensorField& t) const {
  geo::require_same_chart(t.chart(), ambient_);
  if (t.rank() != 2) throw geo::UnsupportedSignature("pull_matrix: expected a rank-2 tensor");
  Matrix m = t.matrix();
  for (auto& row : m) {
    for (auto& e : row) e = pull(e);
  }
  return m;
}

std::vector<AlongField> tangent_frame(const Immersion& i, const CheckConfig& cfg) {
  const std::size_t m = i.params().dim();
  std::vector<AlongField> frame(m, AlongField(i.ambient().dim()));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t k = 0; k < i.ambient().dim(); ++k) {
      frame[a][k] = sym::diff(i.map()[k], i.params().coords()[a]);
    }
  }
  const auto flat = flatten(frame);
  const Matrix fm = frame_matrix(frame);
  for (const auto& p : geo::sample_points(i.params(), cfg, flat)) {
    if (geo::matrix_rank(geo::evaluate(fm, p), kRankTol) != static_cast<int>(m)) {
      throw HypersurfaceError("tangent frame loses rank at " + p.str());
    }
  }
  return frame;
}

Matrix frame_matrix(std::span<const AlongField> frame, const AlongField* transversal) {
  if (frame.empty()) throw geo::DimensionError("frame_matrix: empty frame");
  const std::size_t n = frame.front().size();
  const std::size_t cols = frame.size() + (transversal ? 1 : 0);
  Matrix m(n, std::vector<Expr>(cols));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < frame.size(); ++a) m[k][a] = frame[a].at(k);
    if (transversal) m[k][frame.size()] = transversal->at(k);
  }
  return m;
}

Matrix decompose_in_basis(const Chart& params, const Matrix& basis, const Matrix& rhs,
                          const CheckConfig& cfg, std::string_view what) {
  std::vector<Expr> exprs;
  for (const auto& row : basis) exprs.insert(exprs.end(), row.begin(), row.end());
  for (const auto& row : rhs) exprs.insert(exprs.end(), row.begin(), row.end());
  const auto probes = geo::sample_points(params, cfg, exprs);
  const int n = static_cast<int>(basis.size());
  for (const auto& p : probes) {
    if (geo::matrix_rank(geo::evaluate(basis, p), kRankTol) != n) {
      throw HypersurfaceError(std::string(what) + ": frame and transversal are not a basis at " + p.str());
    }
  }
  return geo::solve(basis, rhs, probes);
}

std::string_view transversal_name(TransversalKind k) {
  switch (k) {
    case TransversalKind::Characteristic: return "characteristic";
    case TransversalKind::MetricNormal: return "metric-normal";
    case TransversalKind::UserField: return "user";
  }
  return "?";
}

AlongField metric_normal(const Immersion& i, const MetricField& g, const CheckConfig& cfg) {
  geo::require_same_chart(g.chart(), i.ambient());
  const auto frame = tangent_frame(i, cfg);
  const std::size_t n = i.ambient().dim();
  const Matrix gp = i.pull_matrix(g.tensor());

  Matrix covectors;
  for (const auto& u : frame) {
    std::vector<Expr> w(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Expr> terms;
      for (std::size_t j = 0; j < n; ++j) terms.push_back(gp[k][j] * u[j]);
      w[k] = sym::sum(terms);
    }
    covectors.push_back(std::move(w));
  }
  AlongField normal(n);
  for (std::size_t k = 0; k < n; ++k) {
    Matrix minor;
    for (const auto& w : covectors) {
      std::vector<Expr> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != k) row.push_back(w[c]);
      }
      minor.push_back(std::move(row));
    }
    const Expr det = determinant(minor);
    normal[k] = k % 2 == 0 ? det : -det;
  }

  std::vector<Expr> probe_exprs = flatten(frame);
  probe_exprs.insert(probe_exprs.end(), normal.begin(), normal.end());
  const auto points = geo::sample_points(i.params(), cfg, probe_exprs);
  const Matrix with_normal = frame_matrix(frame, &normal);
  for (const auto& p : points) {
    if (geo::matrix_rank(geo::evaluate(with_normal, p), kRankTol) != static_cast<int>(n)) {
      throw HypersurfaceError("metric normal is tangent at " + p.str() + " (degenerate induced metric)");
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    if (normal[k].is_zero()) continue;
    bool nonzero = true;
    for (const auto& p : points) nonzero = nonzero && std::abs(sym::eval(normal[k], p)) > 1e-12;
    if (!nonzero) continue;
    const Expr scale = normal[k];
    for (auto& c : normal) c = c / scale;
    break;
  }
  return normal;
}

AlongField resolve_transversal(const Immersion& i, const contact::AcStructure& s,
                               const TransversalChoice& choice, const MetricField* g,
                               const CheckConfig& cfg) {
  switch (choice.kind) {
    case TransversalKind::Characteristic:
      return i.pull(s.xi());
    case TransversalKind::MetricNormal:
      if (g == nullptr) throw PreconditionError("metric normal requested without a metric");
      return metric_normal(i, *g, cfg);
    case TransversalKind::UserField:
      if (!choice.field) throw PreconditionError("user transversal requested without a field");
      return i.pull(*choice.field);
  }
  throw HypersurfaceError("unknown transversal kind");
}

TensorField induced_metric(const Immersion& i, const MetricField& g, const CheckConfig& cfg) {
  const auto frame = tangent_frame(i, cfg);
  const Matrix gp = i.pull_matrix(g.tensor());
  const std::size_t m = frame.size();
  const std::size_t n = i.ambient().dim();
  Matrix rows(m, std::vector<Expr>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) terms.push_back(gp[k][j] * frame[a][k] * frame[b][j]);
      }
      rows[a][b] = sym::sum(terms);
    }
  }
  return TensorField::from_matrix(i.params(), 0, 2, rows);
}

std::string_view xi_position_name(XiPosition p) {
  switch (p) {
    case XiPosition::Tangent: return "tangent";
    case XiPosition::Transversal: return "transversal";
    case XiPosition::Mixed: return "mixed";
  }
  return "?";
}

XiPositionResult xi_position(const Immersion& i, const TensorField& xi, const CheckConfig& cfg) {
  const auto frame = tangent_frame(i, cfg);
  const AlongField xp = i.pull(xi);
  std::vector<Expr> probe_exprs = flatten(frame);
  probe_exprs.insert(probe_exprs.end(), xp.begin(), xp.end());
  const Matrix fm = frame_matrix(frame);

  XiPositionResult r;
  std::vector<std::pair<bool, std::string>> per_point;
  for (const auto& p : geo::sample_points(i.params(), cfg, probe_exprs)) {
    const double res = geo::span_residual(geo::evaluate(fm, p), geo::evaluate(xp, p));
    const bool tangent = res <= kRankTol;
    (tangent ? r.tangent_points : r.transversal_points)++;
    per_point.emplace_back(tangent, p.str());
  }
  if (r.transversal_points == 0) {
    r.position = XiPosition::Tangent;
  } else if (r.tangent_points == 0) {
    r.position = XiPosition::Transversal;
  } else {
    r.position = XiPosition::Mixed;
    const bool majority = r.tangent_points >= r.transversal_points;
    for (const auto& [t, where] : per_point) {
      if (t != majority) r.witnesses.push_back((t ? "tangent at " : "transversal at ") + where);
    }
  }
  return r;
}

}  // namespace lps::hyp
