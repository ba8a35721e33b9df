#include "lps/symexpr/expr.hpp"

namespace lps::sym {

namespace {

// d/du f(u) for each function in the node set.
Expr outer_derivative(Func f, const Expr& u) {
  switch (f) {
    case Func::Exp: return exp(u);
    case Func::Log: return pow(u, -1);
    case Func::Sin: return cos(u);
    case Func::Cos: return -sin(u);
    case Func::Tan: return pow(cos(u), -2);
    case Func::Arcsin: return pow(sqrt(Expr(1) - u * u), -1);
    case Func::Arctan: return pow(Expr(1) + u * u, -1);
    case Func::Sqrt: return Expr(Rational(1, 2)) * pow(sqrt(u), -1);
  }
  return Expr(0);
}

Expr derivative(const Expr& e, std::string_view x) {
  if (!e.depends_on(x)) return Expr(0);
  switch (e.kind()) {
    case Kind::Constant: return Expr(0);
    case Kind::Symbol: return Expr(e.name() == x ? 1 : 0);
    case Kind::Negation: return -derivative(e.args()[0], x);
    case Kind::Sum: {
      std::vector<Expr> terms;
      terms.reserve(e.args().size());
      for (const auto& a : e.args()) terms.push_back(derivative(a, x));
      return sum(terms);
    }
    case Kind::Product: {
      const auto& fs = e.args();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fs[i].depends_on(x)) continue;
        std::vector<Expr> parts;
        parts.reserve(fs.size());
        for (std::size_t j = 0; j < fs.size(); ++j) {
          parts.push_back(j == i ? derivative(fs[j], x) : fs[j]);
        }
        terms.push_back(product(parts));
      }
      return sum(terms);
    }
    case Kind::Quotient: {
      const Expr& a = e.args()[0];
      const Expr& b = e.args()[1];
      return (derivative(a, x) * b - a * derivative(b, x)) / (b * b);
    }
    case Kind::Power: {
      const Expr& base = e.args()[0];
      const long k = e.exponent();
      return Expr(Rational(k)) * pow(base, k - 1) * derivative(base, x);
    }
    case Kind::Function: {
      const Expr& u = e.args()[0];
      return outer_derivative(e.func(), u) * derivative(u, x);
    }
  }
  return Expr(0);
}

}  // namespace

Expr diff(const Expr& e, std::string_view coordinate) { return derivative(simplify(e), coordinate); }

}  // namespace lps::sym
