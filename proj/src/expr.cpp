#include "hcurve/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <utility>

#include "hcurve/errors.hpp"

namespace hcurve {
namespace expr {

namespace {

std::shared_ptr<Node> make(Node::Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

bool is_const(const NodePtr& n, double v) { return n->kind == Node::Kind::Constant && n->value == v; }
bool is_const(const NodePtr& n) { return n->kind == Node::Kind::Constant; }

// Folds only when the result is an ordinary finite number; anything that
// would fail is kept symbolic so the error surfaces at evaluation time.
std::optional<double> try_fold(const NodePtr& n) {
  try {
    const double v = evaluate(*n, 0.0);
    if (std::isfinite(v)) return v;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

double apply_func(Func f, double a, double s) {
  switch (f) {
    case Func::Sin:
      return std::sin(a);
    case Func::Cos:
      return std::cos(a);
    case Func::Tan:
      return std::tan(a);
    case Func::Exp:
      return std::exp(a);
    case Func::Log:
      if (a <= 0.0) throw DomainError("log of non-positive argument", s);
      return std::log(a);
    case Func::Sqrt:
      if (a < 0.0) throw DomainError("sqrt of negative argument", s);
      return std::sqrt(a);
    case Func::Abs:
      return std::fabs(a);
  }
  return 0.0;
}

double apply_binary(BinOp op, double a, double b, double s) {
  switch (op) {
    case BinOp::Add:
      return a + b;
    case BinOp::Sub:
      return a - b;
    case BinOp::Mul:
      return a * b;
    case BinOp::Div:
      if (b == 0.0) throw DomainError("division by zero", s);
      return a / b;
    case BinOp::Pow:
      if (a == 0.0 && b < 0.0) throw DomainError("division by zero in power", s);
      if (a < 0.0 && b != std::floor(b)) throw DomainError("non-integer power of negative base", s);
      return std::pow(a, b);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    NodePtr n = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return n;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Accepts ASCII '-' and the UTF-8 minus sign U+2212.
  bool eat_minus() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        lhs = binary(BinOp::Add, lhs, parse_term());
      } else if (eat_minus()) {
        lhs = binary(BinOp::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (eat('*')) {
        lhs = binary(BinOp::Mul, lhs, parse_factor());
      } else if (eat('/')) {
        lhs = binary(BinOp::Div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    if (eat_minus()) return negate(parse_factor());
    if (eat('+')) return parse_factor();
    NodePtr base = parse_atom();
    if (eat('^')) return binary(BinOp::Pow, base, parse_factor());
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        pos_ = p;
      }
    }
    const std::string token(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) throw ParseError("malformed number '" + token + "'", start);
    return constant(v);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "s") return variable();
    if (name == "pi") return constant(std::numbers::pi);

    static constexpr std::pair<std::string_view, Func> kFuncs[] = {
        {"sin", Func::Sin}, {"cos", Func::Cos},   {"tan", Func::Tan}, {"exp", Func::Exp},
        {"log", Func::Log}, {"sqrt", Func::Sqrt}, {"abs", Func::Abs}};
    for (const auto& [fname, f] : kFuncs) {
      if (name == fname) {
        if (!eat('(')) throw ParseError("expected '(' after " + std::string(name), pos_);
        NodePtr arg = parse_expr();
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        return call(f, arg);
      }
    }
    throw ParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  if (v < 0.0) {
    out += '(';
    out += buf;
    out += ')';
  } else {
    out += buf;
  }
}

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case Node::Kind::Constant:
      append_number(out, n.value);
      return;
    case Node::Kind::Variable:
      out += 's';
      return;
    case Node::Kind::Negate:
      out += "(-";
      print(*n.lhs, out);
      out += ')';
      return;
    case Node::Kind::Binary: {
      static constexpr char kSym[] = {'+', '-', '*', '/', '^'};
      out += '(';
      print(*n.lhs, out);
      out += kSym[static_cast<int>(n.op)];
      print(*n.rhs, out);
      out += ')';
      return;
    }
    case Node::Kind::Call:
      out += func_name(n.func);
      out += '(';
      print(*n.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace

const char* func_name(Func f) {
  switch (f) {
    case Func::Sin:
      return "sin";
    case Func::Cos:
      return "cos";
    case Func::Tan:
      return "tan";
    case Func::Exp:
      return "exp";
    case Func::Log:
      return "log";
    case Func::Sqrt:
      return "sqrt";
    case Func::Abs:
      return "abs";
  }
  return "?";
}

NodePtr constant(double v) {
  auto n = make(Node::Kind::Constant);
  n->value = v;
  return n;
}

NodePtr variable() { return make(Node::Kind::Variable); }

NodePtr negate(NodePtr a) {
  if (is_const(a)) return constant(-a->value);
  if (a->kind == Node::Kind::Negate) return a->lhs;
  auto n = make(Node::Kind::Negate);
  n->lhs = std::move(a);
  return n;
}

NodePtr binary(BinOp op, NodePtr a, NodePtr b) {
  switch (op) {
    case BinOp::Add:
      if (is_const(a, 0.0)) return b;
      if (is_const(b, 0.0)) return a;
      break;
    case BinOp::Sub:
      if (is_const(b, 0.0)) return a;
      if (is_const(a, 0.0)) return negate(b);
      break;
    case BinOp::Mul:
      if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
      if (is_const(a, 1.0)) return b;
      if (is_const(b, 1.0)) return a;
      if (is_const(a, -1.0)) return negate(b);
      if (is_const(b, -1.0)) return negate(a);
      break;
    case BinOp::Div:
      if (is_const(b, 1.0)) return a;
      break;
    case BinOp::Pow:
      if (is_const(b, 1.0)) return a;
      if (is_const(b, 0.0)) return constant(1.0);
      break;
  }
  auto n = make(Node::Kind::Binary);
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  if (is_const(n->lhs) && is_const(n->rhs)) {
    if (auto v = try_fold(n)) return constant(*v);
  }
  return n;
}

NodePtr call(Func f, NodePtr a) {
  auto n = make(Node::Kind::Call);
  n->func = f;
  n->lhs = std::move(a);
  if (is_const(n->lhs)) {
    if (auto v = try_fold(n)) return constant(*v);
  }
  return n;
}

NodePtr parse(std::string_view text) { return Parser(text).run(); }

double evaluate(const Node& n, double s) {
  double v = 0.0;
  switch (n.kind) {
    case Node::Kind::Constant:
      return n.value;
    case Node::Kind::Variable:
      return s;
    case Node::Kind::Negate:
      return -evaluate(*n.lhs, s);
    case Node::Kind::Binary:
      v = apply_binary(n.op, evaluate(*n.lhs, s), evaluate(*n.rhs, s), s);
      break;
    case Node::Kind::Call:
      v = apply_func(n.func, evaluate(*n.lhs, s), s);
      break;
  }
  if (!std::isfinite(v)) throw DomainError("non-finite result", s);
  return v;
}

bool depends_on_s(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Constant:
      return false;
    case Node::Kind::Variable:
      return true;
    case Node::Kind::Negate:
    case Node::Kind::Call:
      return depends_on_s(*n.lhs);
    case Node::Kind::Binary:
      return depends_on_s(*n.lhs) || depends_on_s(*n.rhs);
  }
  return false;
}

NodePtr derivative(const NodePtr& n) {
  using K = Node::Kind;
  switch (n->kind) {
    case K::Constant:
      return constant(0.0);
    case K::Variable:
      return constant(1.0);
    case K::Negate:
      return negate(derivative(n->lhs));
    case K::Binary: {
      const NodePtr& a = n->lhs;
      const NodePtr& b = n->rhs;
      switch (n->op) {
        case BinOp::Add:
          return binary(BinOp::Add, derivative(a), derivative(b));
        case BinOp::Sub:
          return binary(BinOp::Sub, derivative(a), derivative(b));
        case BinOp::Mul:
          return binary(BinOp::Add, binary(BinOp::Mul, derivative(a), b), binary(BinOp::Mul, a, derivative(b)));
        case BinOp::Div: {
          // (a'b - ab') / b^2
          NodePtr num = binary(BinOp::Sub, binary(BinOp::Mul, derivative(a), b), binary(BinOp::Mul, a, derivative(b)));
          return binary(BinOp::Div, num, binary(BinOp::Mul, b, b));
        }
        case BinOp::Pow: {
          if (!depends_on_s(*b)) {
            // c a^(c-1) a'
            NodePtr lowered = binary(BinOp::Pow, a, binary(BinOp::Sub, b, constant(1.0)));
            return binary(BinOp::Mul, binary(BinOp::Mul, b, lowered), derivative(a));
          }
          if (!depends_on_s(*a)) {
            // a^b log(a) b'
            return binary(BinOp::Mul, binary(BinOp::Mul, n, call(Func::Log, a)), derivative(b));
          }
          // a^b (b' log a + b a'/a)
          NodePtr inner = binary(BinOp::Add, binary(BinOp::Mul, derivative(b), call(Func::Log, a)),
                                 binary(BinOp::Div, binary(BinOp::Mul, b, derivative(a)), a));
          return binary(BinOp::Mul, n, inner);
        }
      }
      break;
    }
    case K::Call: {
      const NodePtr& a = n->lhs;
      NodePtr da = derivative(a);
      NodePtr outer;
      switch (n->func) {
        case Func::Sin:
          outer = call(Func::Cos, a);
          break;
        case Func::Cos:
          outer = negate(call(Func::Sin, a));
          break;
        case Func::Tan: {
          NodePtr c = call(Func::Cos, a);
          outer = binary(BinOp::Div, constant(1.0), binary(BinOp::Mul, c, c));
          break;
        }
        case Func::Exp:
          outer = n;
          break;
        case Func::Log:
          outer = binary(BinOp::Div, constant(1.0), a);
          break;
        case Func::Sqrt:
          outer = binary(BinOp::Div, constant(1.0), binary(BinOp::Mul, constant(2.0), n));
          break;
        case Func::Abs:
          outer = binary(BinOp::Div, a, n);
          break;
      }
      return binary(BinOp::Mul, outer, da);
    }
  }
  return constant(0.0);
}

NodePtr substitute(const NodePtr& n, const NodePtr& replacement) {
  using K = Node::Kind;
  switch (n->kind) {
    case K::Constant:
      return n;
    case K::Variable:
      return replacement;
    case K::Negate:
      return negate(substitute(n->lhs, replacement));
    case K::Call:
      return call(n->func, substitute(n->lhs, replacement));
    case K::Binary:
      return binary(n->op, substitute(n->lhs, replacement), substitute(n->rhs, replacement));
  }
  return n;
}

std::string to_string(const Node& n) {
  std::string out;
  print(n, out);
  return out;
}

}  // namespace expr

ScalarFn::ScalarFn() : ScalarFn(expr::constant(0.0)) {}

ScalarFn::ScalarFn(expr::NodePtr root) {
  nodes_[0] = std::move(root);
  for (int k = 1; k <= kMaxOrder; ++k) nodes_[k] = expr::derivative(nodes_[k - 1]);
}

ScalarFn ScalarFn::parse(std::string_view text) { return ScalarFn(expr::parse(text)); }

ScalarFn ScalarFn::constant(double v) { return ScalarFn(expr::constant(v)); }

double ScalarFn::operator()(double s, int order) const {
  if (order < 0 || order > kMaxOrder) throw ParameterError("derivative order must be in [0, 3]");
  return expr::evaluate(*nodes_[order], s);
}

ScalarFn ScalarFn::shifted(double a) const {
  if (a == 0.0) return *this;
  return ScalarFn(expr::substitute(nodes_[0], expr::binary(expr::BinOp::Add, expr::variable(), expr::constant(a))));
}

ScalarFn ScalarFn::differentiate(int order) const {
  if (order < 1 || order > kMaxOrder) throw ParameterError("derivative order must be in [1, 3]");
  return ScalarFn(nodes_[order]);
}

}  // namespace hcurve
