#pragma once

#include <memory>
#include <string>

#include "geoverify/jet.hpp"
#include "geoverify/point.hpp"

namespace geoverify {

/// Closed-form scalar function of the chart variables, stored as an
/// immutable expression tree.
///
/// The same tree evaluates to a plain double or to a second-order jet, so a
/// single definition serves value, gradient and Hessian queries. Copies
/// share structure.
class Expr {
 public:
  enum class Op { kConst, kVar, kAdd, kSub, kMul, kDiv, kNeg, kSqrt, kPow, kRecip };

  Expr() : Expr(0.0) {}
  Expr(double c);  // NOLINT: constants promote implicitly

  /// Coordinate function x_k, k in 0..3 for (x, y, s, t).
  static Expr var(std::size_t k);
  static Expr x() { return var(0); }
  static Expr y() { return var(1); }
  static Expr s() { return var(2); }
  static Expr t() { return var(3); }

  double value(const Point& p) const;
  Jet2 jet(const Point& p) const;

  /// True for a constant leaf; used to fold trivial nodes while building.
  bool is_constant() const;
  Op op() const;

  /// Infix rendering, for diagnostics.
  std::string str() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr sqrt(const Expr& a);
  friend Expr pow(const Expr& a, double r);
  friend Expr reciprocal(const Expr& a);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace geoverify
