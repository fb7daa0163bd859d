#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>

namespace hcurve {

namespace expr {

enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt, Abs };
enum class BinOp { Add, Sub, Mul, Div, Pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable expression tree node over the single variable `s`.
struct Node {
  enum class Kind { Constant, Variable, Negate, Binary, Call };

  Kind kind = Kind::Constant;
  double value = 0.0;        // Constant
  BinOp op = BinOp::Add;     // Binary
  Func func = Func::Sin;     // Call
  NodePtr lhs;               // operand of Negate/Call, left of Binary
  NodePtr rhs;               // right of Binary
};

/// Recursive-descent parser:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | '+' factor | atom ('^' factor)?
///   atom   := number | 's' | 'pi' | func '(' expr ')' | '(' expr ')'
/// Unary minus sits at factor level so "-s^2" is -(s^2); '^' is right-associative.
NodePtr parse(std::string_view text);

/// Throws DomainError instead of producing NaN/inf.
double evaluate(const Node& n, double s);

/// Exact symbolic d/ds with constant folding.
NodePtr derivative(const NodePtr& n);

/// Fully parenthesized text that parses back to an equivalent tree.
std::string to_string(const Node& n);

bool depends_on_s(const Node& n);

/// Replaces every occurrence of `s` by `replacement`.
NodePtr substitute(const NodePtr& n, const NodePtr& replacement);

// Folding constructors.
NodePtr constant(double v);
NodePtr variable();
NodePtr negate(NodePtr a);
NodePtr binary(BinOp op, NodePtr a, NodePtr b);
NodePtr call(Func f, NodePtr a);

const char* func_name(Func f);

}  // namespace expr

/// A user-supplied scalar function of s with its first three symbolic derivatives.
class ScalarFn {
 public:
  static constexpr int kMaxOrder = 3;

  ScalarFn();  // the zero function
  explicit ScalarFn(expr::NodePtr root);

  static ScalarFn parse(std::string_view text);
  static ScalarFn constant(double v);

  /// f^(order)(s); order in [0, 3].
  double operator()(double s, int order = 0) const;

  /// Exact derivative of the given order (1..3) as a new function.
  ScalarFn differentiate(int order = 1) const;

  /// s -> f(s + a).
  ScalarFn shifted(double a) const;

  const expr::Node& ast() const { return *nodes_[0]; }
  const expr::NodePtr& root() const { return nodes_[0]; }
  std::string text() const { return expr::to_string(*nodes_[0]); }

  bool is_constant() const { return !expr::depends_on_s(*nodes_[0]); }

 private:
  std::array<expr::NodePtr, kMaxOrder + 1> nodes_;
};

}  // namespace hcurve
