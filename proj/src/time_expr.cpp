#include "dtrs/time_expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace dtrs {

ExprSyntaxError::ExprSyntaxError(const std::string& message, std::size_t offset)
    : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

ExprEvalError::ExprEvalError(const std::string& message, std::string subexpression)
    : Error(message + " in '" + subexpression + "'"), subexpression_(std::move(subexpression)) {}

struct TimeExpr::Node {
  enum class Kind { Constant, Variable, Negate, Binary };

  Kind kind = Kind::Constant;
  double value = 0.0;
  Op op = Op::Add;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const TimeExpr::Node>;

char op_char(TimeExpr::Op op) {
  switch (op) {
    case TimeExpr::Op::Add: return '+';
    case TimeExpr::Op::Sub: return '-';
    case TimeExpr::Op::Mul: return '*';
    case TimeExpr::Op::Div: return '/';
    case TimeExpr::Op::Pow: return '^';
  }
  return '?';
}

}  // namespace

TimeExpr TimeExpr::constant(double value) {
  if (!std::isfinite(value)) throw Error("time expression constant must be finite");
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Constant;
  node->value = value;
  return TimeExpr(std::move(node));
}

TimeExpr TimeExpr::variable() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Variable;
  return TimeExpr(std::move(node));
}

TimeExpr TimeExpr::negate(TimeExpr operand) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Negate;
  node->lhs = std::move(operand.root_);
  return TimeExpr(std::move(node));
}

TimeExpr TimeExpr::binary(Op op, TimeExpr lhs, TimeExpr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Binary;
  node->op = op;
  node->lhs = std::move(lhs.root_);
  node->rhs = std::move(rhs.root_);
  return TimeExpr(std::move(node));
}

namespace {

void print(const TimeExpr::Node& node, std::string& out) {
  using Kind = TimeExpr::Node::Kind;
  switch (node.kind) {
    case Kind::Constant: {
      std::array<char, 64> buf{};
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), node.value);
      (void)ec;
      const std::string_view text(buf.data(), static_cast<std::size_t>(end - buf.data()));
      if (std::signbit(node.value)) {
        out += "(-";
        out += text.substr(1);
        out += ')';
      } else {
        out += text;
      }
      return;
    }
    case Kind::Variable:
      out += 't';
      return;
    case Kind::Negate:
      out += "(-";
      print(*node.lhs, out);
      out += ')';
      return;
    case Kind::Binary:
      out += '(';
      print(*node.lhs, out);
      out += op_char(node.op);
      print(*node.rhs, out);
      out += ')';
      return;
  }
}

std::string describe(const TimeExpr::Node& node) {
  std::string out;
  print(node, out);
  return out;
}

double checked(double value, const TimeExpr::Node& node) {
  if (!std::isfinite(value)) throw ExprEvalError("non-finite value", describe(node));
  return value;
}

double evaluate(const TimeExpr::Node& node, double t) {
  using Kind = TimeExpr::Node::Kind;
  switch (node.kind) {
    case Kind::Constant: return node.value;
    case Kind::Variable: return t;
    case Kind::Negate: return -evaluate(*node.lhs, t);
    case Kind::Binary: break;
  }
  const double a = evaluate(*node.lhs, t);
  const double b = evaluate(*node.rhs, t);
  switch (node.op) {
    case TimeExpr::Op::Add: return checked(a + b, node);
    case TimeExpr::Op::Sub: return checked(a - b, node);
    case TimeExpr::Op::Mul: return checked(a * b, node);
    case TimeExpr::Op::Div:
      if (b == 0.0) throw ExprEvalError("division by zero", describe(node));
      return checked(a / b, node);
    case TimeExpr::Op::Pow: return checked(std::pow(a, b), node);
  }
  return 0.0;
}

std::size_t node_depth(const TimeExpr::Node& node) {
  std::size_t d = 0;
  if (node.lhs) d = std::max(d, node_depth(*node.lhs));
  if (node.rhs) d = std::max(d, node_depth(*node.rhs));
  return d + 1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_space();
    if (at_end()) throw ExprSyntaxError("empty expression", pos_);
    NodePtr root = expr();
    skip_space();
    if (!at_end()) throw ExprSyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make_binary(TimeExpr::Op op, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<TimeExpr::Node>();
    node->kind = TimeExpr::Node::Kind::Binary;
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_binary(TimeExpr::Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(TimeExpr::Op::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_binary(TimeExpr::Op::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_binary(TimeExpr::Op::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto node = std::make_shared<TimeExpr::Node>();
      node->kind = TimeExpr::Node::Kind::Negate;
      node->lhs = unary();
      return node;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) return make_binary(TimeExpr::Op::Pow, base, unary());
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (at_end()) throw ExprSyntaxError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) throw ExprSyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name != "t") throw ExprSyntaxError("unknown identifier '" + std::string(name) + "'", start);
      auto node = std::make_shared<TimeExpr::Node>();
      node->kind = TimeExpr::Node::Kind::Variable;
      return node;
    }
    throw ExprSyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ExprSyntaxError("malformed number", start);
    if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw ExprSyntaxError("malformed exponent", start);
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw ExprSyntaxError("number out of range", start);
    }
    auto node = std::make_shared<TimeExpr::Node>();
    node->kind = TimeExpr::Node::Kind::Constant;
    node->value = value;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double TimeExpr::operator()(double t) const {
  if (!std::isfinite(t)) throw ExprEvalError("non-finite time", std::to_string(t));
  return evaluate(*root_, t);
}

std::string TimeExpr::to_string() const { return describe(*root_); }

std::size_t TimeExpr::depth() const { return node_depth(*root_); }

TimeExpr parse_time_expr(std::string_view text) {
  Parser parser(text);
  return TimeExpr(parser.parse());
}

}  // namespace dtrs
