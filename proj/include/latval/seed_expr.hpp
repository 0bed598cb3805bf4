#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latval {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset_)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  std::size_t offset;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// A node of the seed-expression language:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' uint)?
///   atom   := number | 'x' | 'y' | 'exp' '(' expr ')' | 'phi' '(' expr ')'
///           | '(' expr ')'
struct ExprNode {
  enum class Kind { Number, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow, Exp, Phi };
  Kind kind;
  double number = 0.0;  // Kind::Number
  int exponent = 0;     // Kind::Pow
  ExprPtr lhs;          // unary operand / left operand
  ExprPtr rhs;          // right operand
};

struct ExprAst {
  ExprPtr root;
};

/// Parses the grammar above. Errors carry the byte offset of the problem.
ExprAst parse(std::string_view src);

struct EvalStatus {
  bool division_by_zero = false;
};

/// IEEE double tree-walk; phi(.) dispatches to phi_stable. Division by an
/// exact zero yields the IEEE result and raises the status flag.
double eval_expr(const ExprAst& e, double x, double y, EvalStatus* status = nullptr);

/// Minimal-parentheses printer; parse(print_expr(a)) reproduces a.
std::string print_expr(const ExprAst& e);

bool structurally_equal(const ExprAst& a, const ExprAst& b);

/// True when the expression references neither x nor y.
bool is_constant_expr(const ExprAst& e);

}  // namespace latval
