#include "lps/symexpr/expr.hpp"

#include <sstream>

namespace lps::sym {

namespace {

// Binding strength of the printed text; higher binds tighter.
enum Prec : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

struct Printed {
  std::string text;
  int prec;
};

Printed print(const Expr& e);

std::string wrap(const Expr& e, int min_prec) {
  Printed p = print(e);
  if (p.prec < min_prec) return "(" + p.text + ")";
  return p.text;
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

bool negative_term(const Expr& t) {
  if (t.is_constant()) return t.value() < 0;
  return t.kind() == Kind::Product && t.args().front().is_constant() &&
         t.args().front().value() < 0;
}

// Canonical product, optionally with its coefficient negated.
Printed print_product(const Expr& e, bool negate) {
  Rational coef = 1;
  std::vector<std::string> num;
  std::vector<std::string> den;
  for (const auto& f : e.args()) {
    if (f.is_constant()) {
      coef = f.value();
    } else if (f.kind() == Kind::Power && f.exponent() < 0) {
      const Expr base = f.args()[0];
      std::string s = wrap(base, kAtom);
      if (f.exponent() != -1) s += "^" + std::to_string(-f.exponent());
      den.push_back(std::move(s));
    } else {
      num.push_back(wrap(f, kPower));
    }
  }
  if (negate) coef = -coef;

  std::string text;
  const bool minus = coef < 0;
  const Rational mag = minus ? Rational(-coef) : coef;
  if (minus) text += "-";
  std::string body;
  if (mag != 1 || num.empty()) body = rational_text(mag);
  for (const auto& n : num) {
    if (!body.empty()) body += "*";
    body += n;
  }
  text += body;
  // One divisor per factor: "/(a*b)" would reparse as the expanded product.
  for (const auto& d : den) text += "/" + d;
  return {text, minus ? kUnary : kProduct};
}

Printed print_term_negated(const Expr& t) {
  if (t.is_constant()) return {rational_text(-t.value()), kProduct};
  return print_product(t, true);
}

Printed print(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant: {
      const Rational& v = e.value();
      const bool integer = boost::multiprecision::denominator(v) == 1;
      if (v < 0) return {rational_text(v), kUnary};
      return {rational_text(v), integer ? kAtom : kProduct};
    }
    case Kind::Symbol: return {e.name(), kAtom};
    case Kind::Function:
      return {std::string(func_name(e.func())) + "(" + print(e.args()[0]).text + ")", kAtom};
    case Kind::Power: {
      if (e.exponent() < 0) {
        std::string s = "1/" + wrap(e.args()[0], kAtom);
        if (e.exponent() != -1) s += "^" + std::to_string(-e.exponent());
        return {s, kProduct};
      }
      return {wrap(e.args()[0], kAtom) + "^" + std::to_string(e.exponent()), kPower};
    }
    case Kind::Product: {
      if (e.canonical()) return print_product(e, false);
      std::string s;
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        if (i > 0) s += "*";
        s += wrap(e.args()[i], kUnary);
      }
      return {s, kProduct};
    }
    case Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        const Expr& t = e.args()[i];
        if (i == 0) {
          s += print(t).text;
        } else if (!e.canonical() && t.kind() == Kind::Negation) {
          s += " - " + wrap(t.args()[0], kProduct);
        } else if (e.canonical() && negative_term(t)) {
          s += " - " + print_term_negated(t).text;
        } else {
          s += " + " + wrap(t, kProduct);
        }
      }
      return {s, kSum};
    }
    case Kind::Negation: return {"-" + wrap(e.args()[0], kProduct + 1), kUnary};
    case Kind::Quotient:
      return {wrap(e.args()[0], kProduct) + "/" + wrap(e.args()[1], kPower), kProduct};
  }
  return {"?", kAtom};
}

}  // namespace

std::string Expr::str() const { return print(*this).text; }

}  // namespace lps::sym
