#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lps::sym {

using Rational = boost::multiprecision::cpp_rational;

/// Node kinds. The first six are the only kinds that survive simplification;
/// Negation and Quotient appear in raw (parsed or hand-built) trees only.
/// The enumerator order is the primary key of the canonical total order.
enum class Kind : std::uint8_t {
  Constant,
  Symbol,
  Function,
  Power,
  Product,
  Sum,
  Negation,
  Quotient,
};

enum class Func : std::uint8_t { Exp, Log, Sin, Cos, Tan, Arcsin, Arctan, Sqrt };

std::string_view func_name(Func f);

/// Raised by parse_expr with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation left a function's domain (log of non-positive, sqrt of negative,
/// arcsin outside [-1, 1], division by zero, overflow).
class DomainError : public EvalError {
 public:
  using EvalError::EvalError;
};

class MissingSymbolError : public EvalError {
 public:
  using EvalError::EvalError;
};

struct Node;

/// Immutable scalar expression over named real coordinates.
///
/// Copies share structure. Every node carries a flag recording whether it is
/// already in canonical (simplified) form, so simplify() on canonical input
/// returns immediately and the arithmetic operators stay cheap when chained.
class Expr {
 public:
  Expr();  // the constant 0
  Expr(int value);  // NOLINT(google-explicit-constructor)
  Expr(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Expr constant(const Rational& value);
  static Expr symbol(std::string name);

  // Raw constructors: build the node as given, without simplification.
  static Expr raw_function(Func f, Expr arg);
  static Expr raw_power(Expr base, long exponent);
  static Expr raw_sum(std::vector<Expr> terms);
  static Expr raw_product(std::vector<Expr> factors);
  static Expr raw_negation(Expr arg);
  static Expr raw_quotient(Expr numerator, Expr denominator);

  Kind kind() const noexcept;
  bool canonical() const noexcept;

  const Rational& value() const;       // Constant
  const std::string& name() const;     // Symbol
  Func func() const;                   // Function
  long exponent() const;               // Power
  const std::vector<Expr>& args() const noexcept;

  bool is_constant() const noexcept { return kind() == Kind::Constant; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Number of nodes in the tree.
  std::size_t size() const noexcept;
  std::set<std::string> symbols() const;
  bool depends_on(std::string_view symbol) const;

  std::string str() const;

  const Node* node() const noexcept { return node_.get(); }

  // Used by the canonical builders in simplify.cpp.
  static Expr from_node(std::shared_ptr<const Node> node);

 private:
  explicit Expr(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind = Kind::Constant;
  bool canonical = false;
  Func func = Func::Exp;
  long exponent = 0;
  Rational value;
  std::string name;
  std::vector<Expr> args;
};

/// Total structural order: negative, zero or positive like strcmp.
int compare(const Expr& a, const Expr& b);

/// Structural equality (not mathematical equivalence).
inline bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
inline bool operator!=(const Expr& a, const Expr& b) { return compare(a, b) != 0; }

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

// Arithmetic on expressions. Results are canonical.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, long exponent);
Expr apply(Func f, const Expr& arg);

inline Expr exp(const Expr& a) { return apply(Func::Exp, a); }
inline Expr log(const Expr& a) { return apply(Func::Log, a); }
inline Expr sin(const Expr& a) { return apply(Func::Sin, a); }
inline Expr cos(const Expr& a) { return apply(Func::Cos, a); }
inline Expr tan(const Expr& a) { return apply(Func::Tan, a); }
inline Expr arcsin(const Expr& a) { return apply(Func::Arcsin, a); }
inline Expr arctan(const Expr& a) { return apply(Func::Arctan, a); }
inline Expr sqrt(const Expr& a) { return apply(Func::Sqrt, a); }

Expr sum(const std::vector<Expr>& terms);
Expr product(const std::vector<Expr>& factors);

/// Canonical form: constant folding, flat sums and products, like-term and
/// like-base collection, expansion of products over sums, exp/log fusion and
/// e^a * e^b -> e^(a+b). No factorization.
Expr simplify(const Expr& e);

/// Exact partial derivative, returned in canonical form.
Expr diff(const Expr& e, std::string_view coordinate);

/// Replaces symbols by expressions; the result is canonical.
Expr substitute(const Expr& e, const std::vector<std::pair<std::string, Expr>>& bindings);

}  // namespace lps::sym
