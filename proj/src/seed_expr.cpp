#include "latval/seed_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "latval/stable_exp.hpp"

namespace latval {

namespace {

ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprAst run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return {e};
  }

 private:
  std::string src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (accept('+')) {
        e = node({ExprNode::Kind::Add, 0, 0, e, term()});
      } else if (accept('-')) {
        e = node({ExprNode::Kind::Sub, 0, 0, e, term()});
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (accept('*')) {
        e = node({ExprNode::Kind::Mul, 0, 0, e, factor()});
      } else if (accept('/')) {
        e = node({ExprNode::Kind::Div, 0, 0, e, factor()});
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (accept('-')) return node({ExprNode::Kind::Neg, 0, 0, factor(), nullptr});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    const double v = read_number("exponent");
    if (v < 0) throw ParseError("negative exponent", at);
    if (v != std::floor(v) || v > 1e9) throw ParseError("non-integer exponent", at);
    return node({ExprNode::Kind::Pow, 0, static_cast<int>(v), base, nullptr});
  }

  ExprPtr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')', "to close parenthesis");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return node({ExprNode::Kind::Number, read_number("number"), 0, nullptr, nullptr});
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string id;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
        id += src_[pos_++];
      }
      if (id == "x") return node({ExprNode::Kind::VarX, 0, 0, nullptr, nullptr});
      if (id == "y") return node({ExprNode::Kind::VarY, 0, 0, nullptr, nullptr});
      if (id == "exp" || id == "phi") {
        expect('(', "after function name");
        ExprPtr arg = expr();
        expect(')', "to close call");
        return node({id == "exp" ? ExprNode::Kind::Exp : ExprNode::Kind::Phi, 0, 0, arg,
                     nullptr});
      }
      throw ParseError("unknown identifier '" + id + "'", at);
    }
    fail(c == '\0' ? "unexpected end of input"
                   : std::string("unexpected character '") + c + "'");
  }

  double read_number(const char* what) {
    skip_ws();
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail(std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
};

double ipow(double b, int n) {
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

double eval_node(const ExprNode& n, double x, double y, EvalStatus* st) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Number: return n.number;
    case K::VarX: return x;
    case K::VarY: return y;
    case K::Neg: return -eval_node(*n.lhs, x, y, st);
    case K::Add: return eval_node(*n.lhs, x, y, st) + eval_node(*n.rhs, x, y, st);
    case K::Sub: return eval_node(*n.lhs, x, y, st) - eval_node(*n.rhs, x, y, st);
    case K::Mul: return eval_node(*n.lhs, x, y, st) * eval_node(*n.rhs, x, y, st);
    case K::Div: {
      const double a = eval_node(*n.lhs, x, y, st);
      const double b = eval_node(*n.rhs, x, y, st);
      if (b == 0.0 && st) st->division_by_zero = true;
      return a / b;
    }
    case K::Pow: return ipow(eval_node(*n.lhs, x, y, st), n.exponent);
    case K::Exp: return std::exp(eval_node(*n.lhs, x, y, st));
    case K::Phi: return phi_stable(eval_node(*n.lhs, x, y, st));
  }
  return 0.0;
}

// Precedence levels used by the printer; must agree with the grammar.
int precedence(ExprNode::Kind k) {
  using K = ExprNode::Kind;
  switch (k) {
    case K::Add:
    case K::Sub: return 1;
    case K::Mul:
    case K::Div: return 2;
    case K::Neg: return 3;
    case K::Pow: return 4;
    default: return 5;
  }
}

void print_node(const ExprNode& n, std::string& out) {
  using K = ExprNode::Kind;
  const int prec = precedence(n.kind);
  auto child = [&out, prec](const ExprNode& c, bool needs_paren_on_equal) {
    const bool paren = precedence(c.kind) < prec + (needs_paren_on_equal ? 1 : 0);
    if (paren) out += '(';
    print_node(c, out);
    if (paren) out += ')';
  };
  switch (n.kind) {
    case K::Number: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", n.number);
      out += buf;
      return;
    }
    case K::VarX: out += 'x'; return;
    case K::VarY: out += 'y'; return;
    case K::Neg:
      out += '-';
      child(*n.lhs, false);
      return;
    case K::Add:
    case K::Sub:
      child(*n.lhs, false);
      out += n.kind == K::Add ? '+' : '-';
      child(*n.rhs, true);
      return;
    case K::Mul:
    case K::Div:
      child(*n.lhs, false);
      out += n.kind == K::Mul ? '*' : '/';
      child(*n.rhs, true);
      return;
    case K::Pow:
      child(*n.lhs, true);
      out += '^';
      out += std::to_string(n.exponent);
      return;
    case K::Exp:
    case K::Phi:
      out += n.kind == K::Exp ? "exp(" : "phi(";
      print_node(*n.lhs, out);
      out += ')';
      return;
  }
}

bool equal_node(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  if (a->kind == ExprNode::Kind::Number && a->number != b->number) return false;
  if (a->kind == ExprNode::Kind::Pow && a->exponent != b->exponent) return false;
  return equal_node(a->lhs, b->lhs) && equal_node(a->rhs, b->rhs);
}

bool constant_node(const ExprPtr& n) {
  if (!n) return true;
  if (n->kind == ExprNode::Kind::VarX || n->kind == ExprNode::Kind::VarY) return false;
  return constant_node(n->lhs) && constant_node(n->rhs);
}

}  // namespace

ExprAst parse(std::string_view src) { return Parser(src).run(); }

double eval_expr(const ExprAst& e, double x, double y, EvalStatus* status) {
  if (!e.root) throw std::invalid_argument("eval_expr: empty AST");
  return eval_node(*e.root, x, y, status);
}

std::string print_expr(const ExprAst& e) {
  if (!e.root) throw std::invalid_argument("print_expr: empty AST");
  std::string out;
  print_node(*e.root, out);
  return out;
}

bool structurally_equal(const ExprAst& a, const ExprAst& b) {
  return equal_node(a.root, b.root);
}

bool is_constant_expr(const ExprAst& e) { return constant_node(e.root); }

}  // namespace latval
