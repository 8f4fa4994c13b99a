#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "latdeg/symcore/errors.hpp"

namespace latdeg {

/// Stencil cell placeholders relative to the source corner (m, n):
/// x00 = x^m_n, x10 = x^{m+1}_n, x01 = x^m_{n+1}.
enum class Placeholder { X00, X10, X01 };

std::string_view placeholder_name(Placeholder p);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Const, Cell, Coeff, Add, Sub, Mul, Div, Neg };
  Kind kind = Kind::Const;
  mpz_class value;
  Placeholder cell = Placeholder::X00;
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr constant(const mpz_class& v);
  static ExprPtr placeholder(Placeholder p);
  static ExprPtr coefficient();
  static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b);
  static ExprPtr negate(ExprPtr a);
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " + msg), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
/// unary := '-' unary | primary; primary := INT | x00 | x10 | x01 | z | '(' expr ')'.
ExprPtr parse_expression(std::string_view text);
/// Minimal-parenthesis rendering; parse(print(e)) is structurally equal to e.
std::string print_expression(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);
bool uses_placeholder(const Expr& e, Placeholder p);
bool uses_coefficient(const Expr& e);

/// Evaluates an expression over any value type. The environment supplies
/// constant(mpz), cell(Placeholder), coefficient() and the field operations
/// add/sub/mul/div/neg.
template <class Env>
auto evaluate(const Expr& e, Env& env) -> decltype(env.constant(e.value)) {
  switch (e.kind) {
    case Expr::Kind::Const:
      return env.constant(e.value);
    case Expr::Kind::Cell:
      return env.cell(e.cell);
    case Expr::Kind::Coeff:
      return env.coefficient();
    case Expr::Kind::Neg:
      return env.neg(evaluate(*e.lhs, env));
    case Expr::Kind::Add:
      return env.add(evaluate(*e.lhs, env), evaluate(*e.rhs, env));
    case Expr::Kind::Sub:
      return env.sub(evaluate(*e.lhs, env), evaluate(*e.rhs, env));
    case Expr::Kind::Mul:
      return env.mul(evaluate(*e.lhs, env), evaluate(*e.rhs, env));
    case Expr::Kind::Div:
      return env.div(evaluate(*e.lhs, env), evaluate(*e.rhs, env));
  }
  throw std::logic_error("unknown expression node");
}

}  // namespace latdeg
