#include "geoverify/expr.hpp"

#include <cmath>
#include <sstream>

namespace geoverify {

struct Expr::Node {
  Op op = Op::kConst;
  double constant = 0.0;  // kConst value, kPow exponent
  std::size_t var = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Expr::Op op, NodePtr lhs, NodePtr rhs = nullptr, double constant = 0.0) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->constant = constant;
  return n;
}

template <class T>
T evaluate(const Expr::Node& n, const std::array<T, kDim>& vars) {
  using Op = Expr::Op;
  switch (n.op) {
    case Op::kConst:
      return T(n.constant);
    case Op::kVar:
      return vars[n.var];
    case Op::kAdd:
      return evaluate(*n.lhs, vars) + evaluate(*n.rhs, vars);
    case Op::kSub:
      return evaluate(*n.lhs, vars) - evaluate(*n.rhs, vars);
    case Op::kMul:
      return evaluate(*n.lhs, vars) * evaluate(*n.rhs, vars);
    case Op::kDiv:
      return evaluate(*n.lhs, vars) * reciprocal_checked(evaluate(*n.rhs, vars));
    case Op::kNeg:
      return -evaluate(*n.lhs, vars);
    case Op::kSqrt:
      return sqrt_checked(evaluate(*n.lhs, vars));
    case Op::kPow:
      return pow_checked(evaluate(*n.lhs, vars), n.constant);
    case Op::kRecip:
      return reciprocal_checked(evaluate(*n.lhs, vars));
  }
  throw std::logic_error("Expr: corrupt node");
}

void render(const Expr::Node& n, std::ostream& os) {
  using Op = Expr::Op;
  switch (n.op) {
    case Op::kConst:
      os << n.constant;
      return;
    case Op::kVar:
      os << "xyst"[n.var];
      return;
    case Op::kAdd:
    case Op::kSub:
    case Op::kMul:
    case Op::kDiv: {
      const char sym = n.op == Op::kAdd ? '+' : n.op == Op::kSub ? '-' : n.op == Op::kMul ? '*' : '/';
      os << '(';
      render(*n.lhs, os);
      os << ' ' << sym << ' ';
      render(*n.rhs, os);
      os << ')';
      return;
    }
    case Op::kNeg:
      os << "-";
      render(*n.lhs, os);
      return;
    case Op::kSqrt:
      os << "sqrt(";
      render(*n.lhs, os);
      os << ')';
      return;
    case Op::kPow:
      os << "pow(";
      render(*n.lhs, os);
      os << ", " << n.constant << ')';
      return;
    case Op::kRecip:
      os << "1/(";
      render(*n.lhs, os);
      os << ')';
      return;
  }
}

}  // namespace

Expr::Expr(double c) : node_(make_node(Op::kConst, nullptr, nullptr, c)) {}

Expr Expr::var(std::size_t k) {
  if (k >= kDim) throw std::out_of_range("Expr::var: variable index out of range");
  auto n = std::make_shared<Node>();
  n->op = Op::kVar;
  n->var = k;
  return Expr(NodePtr(std::move(n)));
}

double Expr::value(const Point& p) const { return evaluate<double>(*node_, p.coords()); }

Jet2 Expr::jet(const Point& p) const {
  const auto c = p.coords();
  return evaluate<Jet2>(*node_, {Jet2::seed(c, 0), Jet2::seed(c, 1), Jet2::seed(c, 2),
                                 Jet2::seed(c, 3)});
}

bool Expr::is_constant() const { return node_->op == Op::kConst; }
Expr::Op Expr::op() const { return node_->op; }

std::string Expr::str() const {
  std::ostringstream os;
  os.precision(17);
  render(*node_, os);
  return os.str();
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.node_->constant + b.node_->constant);
  return Expr(make_node(Expr::Op::kAdd, a.node_, b.node_));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.node_->constant - b.node_->constant);
  return Expr(make_node(Expr::Op::kSub, a.node_, b.node_));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.node_->constant * b.node_->constant);
  return Expr(make_node(Expr::Op::kMul, a.node_, b.node_));
}

Expr operator/(const Expr& a, const Expr& b) {
  return Expr(make_node(Expr::Op::kDiv, a.node_, b.node_));
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr(-a.node_->constant);
  return Expr(make_node(Expr::Op::kNeg, a.node_));
}

Expr sqrt(const Expr& a) { return Expr(make_node(Expr::Op::kSqrt, a.node_)); }

Expr pow(const Expr& a, double r) { return Expr(make_node(Expr::Op::kPow, a.node_, nullptr, r)); }

Expr reciprocal(const Expr& a) { return Expr(make_node(Expr::Op::kRecip, a.node_)); }

}  // namespace geoverify
