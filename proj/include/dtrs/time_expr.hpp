#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "dtrs/error.hpp"

namespace dtrs {

/// Raised by parse_time_expr; offset is the byte position of the problem.
class ExprSyntaxError : public Error {
 public:
  ExprSyntaxError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by evaluation when a subexpression is singular or non-finite.
class ExprEvalError : public Error {
 public:
  ExprEvalError(const std::string& message, std::string subexpression);
  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

class TimeExpr;
TimeExpr parse_time_expr(std::string_view text);

/// Arithmetic expression in the single variable t.
///
/// Immutable: nodes are shared between copies and never modified, so a
/// TimeExpr may be evaluated concurrently from any number of threads.
class TimeExpr {
 public:
  enum class Op { Add, Sub, Mul, Div, Pow };

  static TimeExpr constant(double value);
  static TimeExpr variable();
  static TimeExpr negate(TimeExpr operand);
  static TimeExpr binary(Op op, TimeExpr lhs, TimeExpr rhs);

  /// Evaluates at t. Throws ExprEvalError on division by zero or any
  /// non-finite intermediate value.
  double operator()(double t) const;

  /// Fully parenthesized text that parses back to an equivalent tree.
  std::string to_string() const;

  /// Number of nodes on the longest root-to-leaf path.
  std::size_t depth() const;

  // Opaque tree node, defined in time_expr.cpp.
  struct Node;

 private:
  friend TimeExpr parse_time_expr(std::string_view text);
  explicit TimeExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

/// Grammar, loosest to tightest binding:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?          (right-associative)
///   atom   := number | 't' | '(' expr ')'
/// Implicit multiplication ("2t") is rejected.
TimeExpr parse_time_expr(std::string_view text);

inline double eval(const TimeExpr& expr, double t) { return expr(t); }

}  // namespace dtrs
