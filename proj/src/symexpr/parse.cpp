#include "lps/symexpr/sample.hpp"

#include <cctype>
#include <optional>

namespace lps::sym {

// Grammar (whitespace is insignificant):
//
//   expr    = term , { ( "+" | "-" ) , term } ;
//   term    = unary , { ( "*" | "/" ) , unary } ;
//   unary   = ( "-" | "+" ) , unary | power ;
//   power   = primary , [ "^" , unary ] ;          (* exponent must fold to an integer *)
//   primary = number | identifier , [ "(" , expr , ")" ] | "(" , expr , ")" ;
//   number  = digit , { digit } , [ "." , { digit } ] , [ ( "e" | "E" ) , [ "+" | "-" ] , digit , { digit } ] ;
//   identifier = ( letter | "_" ) , { letter | digit | "_" } ;
//
// An identifier followed by "(" must name one of exp, log, sin, cos, tan,
// arcsin, arctan, sqrt. Numbers are read exactly as rationals.

namespace {

constexpr long kMaxExponent = 10000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(Expr::raw_negation(term()));
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms.front() : Expr::raw_sum(std::move(terms));
  }

  Expr term() {
    Expr acc = unary();
    for (;;) {
      if (accept('*')) {
        Expr rhs = unary();
        if (acc.kind() == Kind::Product && !acc.canonical()) {
          std::vector<Expr> fs = acc.args();
          fs.push_back(std::move(rhs));
          acc = Expr::raw_product(std::move(fs));
        } else {
          acc = Expr::raw_product({acc, std::move(rhs)});
        }
      } else if (accept('/')) {
        acc = Expr::raw_quotient(acc, unary());
      } else {
        return acc;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::raw_negation(unary());
    if (accept('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    Expr exponent = simplify(unary());
    if (!exponent.is_constant() || boost::multiprecision::denominator(exponent.value()) != 1) {
      throw ParseError("exponent must be an integer constant", at);
    }
    const auto k = boost::multiprecision::numerator(exponent.value());
    if (k > kMaxExponent || k < -kMaxExponent) throw ParseError("exponent out of range", at);
    return Expr::raw_power(base, k.convert_to<long>());
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        const auto f = lookup(name);
        if (!f) throw ParseError("unknown function '" + name + "'", start);
        ++pos_;
        Expr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return Expr::raw_function(*f, std::move(arg));
      }
      return Expr::symbol(std::move(name));
    }
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static std::optional<Func> lookup(const std::string& name) {
    for (Func f : {Func::Exp, Func::Log, Func::Sin, Func::Cos, Func::Tan, Func::Arcsin,
                   Func::Arctan, Func::Sqrt}) {
      if (func_name(f) == name) return f;
    }
    return std::nullopt;
  }

  Expr number() {
    const std::size_t start = pos_;
    boost::multiprecision::cpp_int digits = 0;
    long scale = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits = digits * 10 + (text_[pos_++] - '0');
      any = true;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits = digits * 10 + (text_[pos_++] - '0');
        --scale;
        any = true;
      }
    }
    if (!any) throw ParseError("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      int sign = 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) {
        sign = text_[look] == '-' ? -1 : 1;
        ++look;
      }
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        long e = 0;
        while (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
          e = e * 10 + (text_[look++] - '0');
          if (e > kMaxExponent) throw ParseError("exponent out of range", start);
        }
        scale += sign * e;
        pos_ = look;
      }
    }
    boost::multiprecision::cpp_int power = 1;
    for (long i = 0; i < (scale < 0 ? -scale : scale); ++i) power *= 10;
    return Expr(scale < 0 ? Rational(digits, power) : Rational(digits * power));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace lps::sym
