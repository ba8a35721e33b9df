#include "lps/symexpr/expr.hpp"

#include <map>

namespace lps::sym {

namespace {

namespace mp = boost::multiprecision;

// Canonical invariants maintained by the builders below:
//  - Sum: >= 2 terms, no nested sums, at most one constant (first), remaining
//    terms ordered by monomial with distinct monomials and nonzero coefficients.
//  - Product: optional leading rational coefficient != 1, then >= 1 factors
//    ordered by base with distinct bases; no Sum factor with exponent 1; at
//    most one exp factor; sqrt factors carry exponent +-1.
//  - Power: base is a Symbol, Function (not exp) or Sum; exponent not in {0, 1};
//    a Sum base carries exponent -1 unless its expansion would be too large.

constexpr long kMaxExpandedTerms = 256;

Expr make_sum(const std::vector<Expr>& terms);
Expr make_product(const std::vector<Expr>& factors);
Expr make_power(const Expr& base, long k);
Expr make_function(Func f, const Expr& arg);

Expr canonical_node(Kind kind, std::vector<Expr> args, long exponent = 0, Func f = Func::Exp) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->canonical = true;
  n->args = std::move(args);
  n->exponent = exponent;
  n->func = f;
  return Expr::from_node(std::move(n));
}

Rational rational_pow(Rational r, long k) {
  if (k < 0) {
    if (r == 0) throw DomainError("division by zero");
    r = Rational(1) / r;
    k = -k;
  }
  Rational out = 1;
  while (k > 0) {
    if (k & 1) out *= r;
    r *= r;
    k >>= 1;
  }
  return out;
}

bool is_function(const Expr& e, Func f) { return e.kind() == Kind::Function && e.func() == f; }

bool expandable(const Expr& sum_base, long k);
Expr distribute(const Expr& a, const Expr& b);

struct ProductAccumulator {
  Rational coef = 1;
  std::map<Expr, long, ExprLess> powers;

  void add(const Expr& f, long k) {
    if (k == 0) return;
    switch (f.kind()) {
      case Kind::Constant: coef *= rational_pow(f.value(), k); break;
      case Kind::Product:
        for (const auto& a : f.args()) add(a, k);
        break;
      case Kind::Power: add(f.args()[0], f.exponent() * k); break;
      default: powers[f] += k; break;
    }
  }

  // Exp fusion and sqrt(a)^k -> a^(k/2) sqrt(a)^(k%2). Returns true if anything changed.
  bool normalize_once() {
    bool changed = false;

    std::vector<Expr> exp_args;
    long exp_count = 0;
    bool exp_nontrivial = false;
    for (auto it = powers.begin(); it != powers.end();) {
      if (it->second != 0 && is_function(it->first, Func::Exp)) {
        exp_args.push_back(make_product({Expr(Rational(it->second)), it->first.args()[0]}));
        exp_nontrivial = exp_nontrivial || it->second != 1;
        ++exp_count;
        it = powers.erase(it);
      } else {
        ++it;
      }
    }
    if (exp_count > 0) {
      if (exp_count == 1 && !exp_nontrivial) {
        powers[make_function(Func::Exp, exp_args.front())] += 1;
      } else {
        add(make_function(Func::Exp, make_sum(exp_args)), 1);
        changed = true;
      }
    }

    std::vector<std::pair<Expr, long>> roots;
    for (const auto& [base, k] : powers) {
      if (is_function(base, Func::Sqrt) && (k <= -2 || k >= 2)) roots.emplace_back(base, k);
    }
    for (const auto& [base, k] : roots) {
      const long q = k / 2;
      const long r = k - 2 * q;
      if (r == 0) {
        powers.erase(base);
      } else {
        powers[base] = r;
      }
      add(base.args()[0], q);
      changed = true;
    }

    // s^-k -> (expanded s^k)^-1, so both spellings of a reciprocal power agree.
    std::vector<std::pair<Expr, long>> inverses;
    for (const auto& [base, k] : powers) {
      if (base.kind() == Kind::Sum && expandable(base, -k)) inverses.emplace_back(base, k);
    }
    for (const auto& [base, k] : inverses) {
      powers.erase(base);
      Expr acc = base;
      for (long i = 1; i < -k; ++i) acc = distribute(acc, base);
      add(acc, -1);
      changed = true;
    }
    return changed;
  }

  Expr finish();
};

bool expandable(const Expr& sum_base, long k) {
  if (k < 2) return false;
  long terms = 1;
  for (long i = 0; i < k; ++i) {
    terms *= static_cast<long>(sum_base.args().size());
    if (terms > kMaxExpandedTerms) return false;
  }
  return true;
}

Expr distribute(const Expr& a, const Expr& b) {
  const std::vector<Expr> as = a.kind() == Kind::Sum ? a.args() : std::vector<Expr>{a};
  const std::vector<Expr> bs = b.kind() == Kind::Sum ? b.args() : std::vector<Expr>{b};
  std::vector<Expr> terms;
  terms.reserve(as.size() * bs.size());
  for (const auto& x : as) {
    for (const auto& y : bs) terms.push_back(make_product({x, y}));
  }
  return make_sum(terms);
}

Expr ProductAccumulator::finish() {
  for (int guard = 0; guard < 64 && normalize_once(); ++guard) {
  }
  if (coef == 0) return Expr(0);

  std::vector<Expr> factors;
  std::vector<Expr> sums;
  for (const auto& [base, k] : powers) {
    if (k == 0) continue;
    if (base.kind() == Kind::Sum && k == 1) {
      sums.push_back(base);
    } else if (base.kind() == Kind::Sum && expandable(base, k)) {
      Expr acc = base;
      for (long i = 1; i < k; ++i) acc = distribute(acc, base);
      sums.push_back(acc);
    } else {
      factors.push_back(k == 1 ? base : canonical_node(Kind::Power, {base}, k));
    }
  }

  if (!sums.empty()) {
    // Multiply everything else into the first sum, term by term.
    std::vector<Expr> rest = factors;
    rest.push_back(Expr(coef));
    for (std::size_t i = 1; i < sums.size(); ++i) rest.push_back(sums[i]);
    std::vector<Expr> terms;
    const Expr& head = sums.front();
    const std::vector<Expr> head_terms =
        head.kind() == Kind::Sum ? head.args() : std::vector<Expr>{head};
    terms.reserve(head_terms.size());
    for (const auto& t : head_terms) {
      std::vector<Expr> parts = rest;
      parts.push_back(t);
      terms.push_back(make_product(parts));
    }
    return make_sum(terms);
  }

  if (factors.empty()) return Expr(coef);
  if (coef == 1 && factors.size() == 1) return factors.front();
  std::vector<Expr> args;
  args.reserve(factors.size() + 1);
  if (coef != 1) args.push_back(Expr(coef));
  for (auto& f : factors) args.push_back(std::move(f));
  return canonical_node(Kind::Product, std::move(args));
}

Expr make_product(const std::vector<Expr>& factors) {
  ProductAccumulator acc;
  for (const auto& f : factors) acc.add(f, 1);
  return acc.finish();
}

Expr make_power(const Expr& base, long k) {
  if (k == 0) return Expr(1);
  if (k == 1) return base;
  ProductAccumulator acc;
  acc.add(base, k);
  return acc.finish();
}

// Splits a canonical non-constant term into coefficient and monomial.
std::pair<Rational, Expr> split_term(const Expr& t) {
  if (t.kind() == Kind::Product && t.args().front().is_constant()) {
    const auto& args = t.args();
    const Rational c = args.front().value();
    if (args.size() == 2) return {c, args[1]};
    return {c, canonical_node(Kind::Product, std::vector<Expr>(args.begin() + 1, args.end()))};
  }
  return {Rational(1), t};
}

Expr scale(const Expr& mono, const Rational& c) {
  if (c == 1) return mono;
  std::vector<Expr> args{Expr(c)};
  if (mono.kind() == Kind::Product) {
    args.insert(args.end(), mono.args().begin(), mono.args().end());
  } else {
    args.push_back(mono);
  }
  return canonical_node(Kind::Product, std::move(args));
}

Expr make_sum(const std::vector<Expr>& terms) {
  Rational constant = 0;
  std::map<Expr, Rational, ExprLess> acc;
  std::vector<const Expr*> stack;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) stack.push_back(&*it);
  while (!stack.empty()) {
    const Expr& t = *stack.back();
    stack.pop_back();
    if (t.kind() == Kind::Sum) {
      for (auto it = t.args().rbegin(); it != t.args().rend(); ++it) stack.push_back(&*it);
    } else if (t.is_constant()) {
      constant += t.value();
    } else {
      auto [c, mono] = split_term(t);
      acc[mono] += c;
    }
  }
  std::vector<Expr> out;
  if (constant != 0) out.push_back(Expr(constant));
  for (const auto& [mono, c] : acc) {
    if (c != 0) out.push_back(scale(mono, c));
  }
  if (out.empty()) return Expr(0);
  if (out.size() == 1) return out.front();
  return canonical_node(Kind::Sum, std::move(out));
}

bool perfect_square(const mp::cpp_int& n, mp::cpp_int& root) {
  if (n < 0) return false;
  root = mp::sqrt(n);
  return root * root == n;
}

Expr make_function(Func f, const Expr& arg) {
  switch (f) {
    case Func::Exp:
      if (arg.is_zero()) return Expr(1);
      if (is_function(arg, Func::Log)) return arg.args()[0];
      break;
    case Func::Log:
      if (arg.is_one()) return Expr(0);
      if (is_function(arg, Func::Exp)) return arg.args()[0];
      break;
    case Func::Sin:
    case Func::Tan:
    case Func::Arcsin:
    case Func::Arctan:
      if (arg.is_zero()) return Expr(0);
      break;
    case Func::Cos:
      if (arg.is_zero()) return Expr(1);
      break;
    case Func::Sqrt:
      if (arg.is_constant()) {
        mp::cpp_int num_root;
        mp::cpp_int den_root;
        if (perfect_square(mp::numerator(arg.value()), num_root) &&
            perfect_square(mp::denominator(arg.value()), den_root)) {
          return Expr(Rational(num_root, den_root));
        }
      }
      break;
  }
  return canonical_node(Kind::Function, {arg}, 0, f);
}

}  // namespace

Expr simplify(const Expr& e) {
  if (e.canonical()) return e;
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Symbol: return e;
    case Kind::Negation: return make_product({Expr(-1), simplify(e.args()[0])});
    case Kind::Quotient:
      return make_product({simplify(e.args()[0]), make_power(simplify(e.args()[1]), -1)});
    case Kind::Power: return make_power(simplify(e.args()[0]), e.exponent());
    case Kind::Function: return make_function(e.func(), simplify(e.args()[0]));
    case Kind::Sum:
    case Kind::Product: {
      std::vector<Expr> parts;
      parts.reserve(e.args().size());
      for (const auto& a : e.args()) parts.push_back(simplify(a));
      return e.kind() == Kind::Sum ? make_sum(parts) : make_product(parts);
    }
  }
  return e;
}

Expr sum(const std::vector<Expr>& terms) {
  std::vector<Expr> parts;
  parts.reserve(terms.size());
  for (const auto& t : terms) parts.push_back(simplify(t));
  return make_sum(parts);
}

Expr product(const std::vector<Expr>& factors) {
  std::vector<Expr> parts;
  parts.reserve(factors.size());
  for (const auto& f : factors) parts.push_back(simplify(f));
  return make_product(parts);
}

Expr pow(const Expr& base, long exponent) { return make_power(simplify(base), exponent); }

Expr apply(Func f, const Expr& arg) { return make_function(f, simplify(arg)); }

}  // namespace lps::sym
