#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace minkhelix {

enum class ExprKind { Number, Variable, Constant, Negate, Add, Sub, Mul, Div, Pow, Call };

enum class MathFunction { Sin, Cos, Tan, Sec, Sinh, Cosh, Tanh, Coth, Exp, Ln, Sqrt, Abs };

enum class NamedConstant { Pi, E };

/// Immutable expression tree in the single variable `s`.
///
/// Grammar (whitespace ignored):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?          right-associative
///     primary := number | 's' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
///
/// There is no implicit multiplication: "2s" is rejected.
class Expr {
 public:
  static Expr number(double value);
  static Expr variable();
  static Expr constant(NamedConstant c);
  static Expr negate(Expr operand);
  static Expr binary(ExprKind op, Expr lhs, Expr rhs);
  static Expr call(MathFunction fn, Expr argument);

  ExprKind kind() const;
  double value() const;                   // Number
  NamedConstant named_constant() const;   // Constant
  MathFunction function() const;          // Call
  Expr operand() const;                   // Negate, Call
  Expr lhs() const;                       // binary
  Expr rhs() const;                       // binary

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws ParseError carrying the byte offset of the offending token.
Expr parse(std::string_view text);

/// Throws EvalError on domain violations (ln of a non-positive value,
/// division by zero, sec/tan at a pole, overflow, ...).
double eval(const Expr& expr, double s);

/// Canonical, fully parenthesised text; parse(print_expr(x)) == x.
std::string print_expr(const Expr& expr);

std::string_view function_name(MathFunction fn);

}  // namespace minkhelix
