#include "lps/symexpr/expr.hpp"

#include <algorithm>

namespace lps::sym {

namespace {

std::shared_ptr<Node> make_node(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

const Expr& zero_constant() {
  static const Expr zero = Expr::constant(0);
  return zero;
}

}  // namespace

std::string_view func_name(Func f) {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Arcsin: return "arcsin";
    case Func::Arctan: return "arctan";
    case Func::Sqrt: return "sqrt";
  }
  return "?";
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

Expr::Expr() : node_(zero_constant().node_) {}

Expr::Expr(int value) : Expr(constant(Rational(value))) {}

Expr::Expr(const Rational& value) : Expr(constant(value)) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::from_node(std::shared_ptr<const Node> node) { return Expr(std::move(node)); }

Expr Expr::constant(const Rational& value) {
  auto n = make_node(Kind::Constant);
  n->canonical = true;
  n->value = value;
  return from_node(std::move(n));
}

Expr Expr::symbol(std::string name) {
  auto n = make_node(Kind::Symbol);
  n->canonical = true;
  n->name = std::move(name);
  return from_node(std::move(n));
}

Expr Expr::raw_function(Func f, Expr arg) {
  auto n = make_node(Kind::Function);
  n->func = f;
  n->args.push_back(std::move(arg));
  return from_node(std::move(n));
}

Expr Expr::raw_power(Expr base, long exponent) {
  auto n = make_node(Kind::Power);
  n->exponent = exponent;
  n->args.push_back(std::move(base));
  return from_node(std::move(n));
}

Expr Expr::raw_sum(std::vector<Expr> terms) {
  auto n = make_node(Kind::Sum);
  n->args = std::move(terms);
  return from_node(std::move(n));
}

Expr Expr::raw_product(std::vector<Expr> factors) {
  auto n = make_node(Kind::Product);
  n->args = std::move(factors);
  return from_node(std::move(n));
}

Expr Expr::raw_negation(Expr arg) {
  auto n = make_node(Kind::Negation);
  n->args.push_back(std::move(arg));
  return from_node(std::move(n));
}

Expr Expr::raw_quotient(Expr numerator, Expr denominator) {
  auto n = make_node(Kind::Quotient);
  n->args.push_back(std::move(numerator));
  n->args.push_back(std::move(denominator));
  return from_node(std::move(n));
}

Kind Expr::kind() const noexcept { return node_->kind; }
bool Expr::canonical() const noexcept { return node_->canonical; }

const Rational& Expr::value() const {
  if (node_->kind != Kind::Constant) throw std::logic_error("Expr::value on non-constant");
  return node_->value;
}

const std::string& Expr::name() const {
  if (node_->kind != Kind::Symbol) throw std::logic_error("Expr::name on non-symbol");
  return node_->name;
}

Func Expr::func() const {
  if (node_->kind != Kind::Function) throw std::logic_error("Expr::func on non-function");
  return node_->func;
}

long Expr::exponent() const {
  if (node_->kind != Kind::Power) throw std::logic_error("Expr::exponent on non-power");
  return node_->exponent;
}

const std::vector<Expr>& Expr::args() const noexcept { return node_->args; }

bool Expr::is_zero() const noexcept { return kind() == Kind::Constant && node_->value == 0; }
bool Expr::is_one() const noexcept { return kind() == Kind::Constant && node_->value == 1; }

std::size_t Expr::size() const noexcept {
  std::size_t total = 1;
  for (const auto& a : node_->args) total += a.size();
  return total;
}

std::set<std::string> Expr::symbols() const {
  std::set<std::string> out;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->kind == Kind::Symbol) out.insert(n->name);
    for (const auto& a : n->args) stack.push_back(a.node());
  }
  return out;
}

bool Expr::depends_on(std::string_view symbol) const {
  if (node_->kind == Kind::Symbol) return node_->name == symbol;
  return std::any_of(node_->args.begin(), node_->args.end(),
                     [&](const Expr& a) { return a.depends_on(symbol); });
}

int compare(const Expr& a, const Expr& b) {
  const Node* x = a.node();
  const Node* y = b.node();
  if (x == y) return 0;
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  switch (x->kind) {
    case Kind::Constant:
      if (x->value == y->value) return 0;
      return x->value < y->value ? -1 : 1;
    case Kind::Symbol: {
      const int c = x->name.compare(y->name);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Function:
      if (x->func != y->func) return x->func < y->func ? -1 : 1;
      return compare(x->args[0], y->args[0]);
    case Kind::Power: {
      const int c = compare(x->args[0], y->args[0]);
      if (c != 0) return c;
      if (x->exponent == y->exponent) return 0;
      return x->exponent < y->exponent ? -1 : 1;
    }
    default: {
      const std::size_t n = std::min(x->args.size(), y->args.size());
      for (std::size_t i = 0; i < n; ++i) {
        const int c = compare(x->args[i], y->args[i]);
        if (c != 0) return c;
      }
      if (x->args.size() == y->args.size()) return 0;
      return x->args.size() < y->args.size() ? -1 : 1;
    }
  }
}

Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return product({a, pow(b, -1)}); }
Expr operator-(const Expr& a) { return product({Expr(-1), a}); }

Expr substitute(const Expr& e, const std::vector<std::pair<std::string, Expr>>& bindings) {
  switch (e.kind()) {
    case Kind::Constant: return e;
    case Kind::Symbol:
      for (const auto& [name, value] : bindings) {
        if (name == e.name()) return simplify(value);
      }
      return e;
    case Kind::Function: return apply(e.func(), substitute(e.args()[0], bindings));
    case Kind::Power: return pow(substitute(e.args()[0], bindings), e.exponent());
    case Kind::Negation: return -substitute(e.args()[0], bindings);
    case Kind::Quotient:
      return substitute(e.args()[0], bindings) / substitute(e.args()[1], bindings);
    case Kind::Sum:
    case Kind::Product: {
      std::vector<Expr> parts;
      parts.reserve(e.args().size());
      for (const auto& a : e.args()) parts.push_back(substitute(a, bindings));
      return e.kind() == Kind::Sum ? sum(parts) : product(parts);
    }
  }
  return e;
}

}  // namespace lps::sym
