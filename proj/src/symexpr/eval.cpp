#include "lps/symexpr/sample.hpp"

#include <cmath>
#include <sstream>

namespace lps::sym {

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("non-finite value in ") + what);
  return v;
}

double eval_function(Func f, double u) {
  switch (f) {
    case Func::Exp: return checked(std::exp(u), "exp");
    case Func::Log:
      if (!(u > 0)) throw DomainError("log of non-positive value");
      return std::log(u);
    case Func::Sin: return std::sin(u);
    case Func::Cos: return std::cos(u);
    case Func::Tan:
      if (std::cos(u) == 0.0) throw DomainError("tan at a pole");
      return checked(std::tan(u), "tan");
    case Func::Arcsin:
      if (u < -1.0 || u > 1.0) throw DomainError("arcsin outside [-1, 1]");
      return std::asin(u);
    case Func::Arctan: return std::atan(u);
    case Func::Sqrt:
      if (u < 0) throw DomainError("sqrt of negative value");
      return std::sqrt(u);
  }
  return 0.0;
}

double eval_node(const Expr& e, const SamplePoint& p) {
  switch (e.kind()) {
    case Kind::Constant: return e.value().convert_to<double>();
    case Kind::Symbol: return p.at(e.name());
    case Kind::Function: return eval_function(e.func(), eval_node(e.args()[0], p));
    case Kind::Power: {
      const double b = eval_node(e.args()[0], p);
      if (b == 0.0 && e.exponent() < 0) throw DomainError("division by zero");
      return checked(std::pow(b, static_cast<double>(e.exponent())), "power");
    }
    case Kind::Negation: return -eval_node(e.args()[0], p);
    case Kind::Quotient: {
      const double num = eval_node(e.args()[0], p);
      const double den = eval_node(e.args()[1], p);
      if (den == 0.0) throw DomainError("division by zero");
      return checked(num / den, "quotient");
    }
    case Kind::Sum: {
      double s = 0.0;
      for (const auto& a : e.args()) s += eval_node(a, p);
      return checked(s, "sum");
    }
    case Kind::Product: {
      double s = 1.0;
      for (const auto& a : e.args()) s *= eval_node(a, p);
      return checked(s, "product");
    }
  }
  return 0.0;
}

}  // namespace

double SamplePoint::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw MissingSymbolError("no value for coordinate '" + name + "'");
  return it->second;
}

std::string SamplePoint::str() const {
  std::ostringstream os;
  os.precision(6);
  os << "{";
  bool first = true;
  for (const auto& [k, v] : values_) {
    if (!first) os << ", ";
    first = false;
    os << k << "=" << v;
  }
  os << "}";
  return os.str();
}

double eval(const Expr& e, const SamplePoint& p) { return eval_node(e, p); }

}  // namespace lps::sym
