#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace geoverify {

/// Number of chart variables (x, y, s, t).
inline constexpr std::size_t kDim = 4;

/// Raised when an expression leaves its domain: a pole, a negative square
/// root, a non-integer power of a non-positive base, or a point with t <= 0.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// First-order jet: value and gradient in the four chart variables.
///
/// Used where a quantity is itself built from first derivatives (Christoffel
/// symbols, frame connection coefficients) and only one more derivative is
/// needed.
class Jet1 {
 public:
  constexpr Jet1() = default;
  constexpr Jet1(double value) : value_(value) {}  // NOLINT: implicit constant
  constexpr Jet1(double value, const std::array<double, kDim>& grad)
      : value_(value), grad_(grad) {}

  constexpr double value() const { return value_; }
  constexpr double grad(std::size_t i) const { return grad_[i]; }
  constexpr const std::array<double, kDim>& gradient() const { return grad_; }

  Jet1& operator+=(const Jet1& b);
  Jet1& operator-=(const Jet1& b);
  Jet1& operator*=(const Jet1& b);
  Jet1& operator/=(const Jet1& b);

  friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
  friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
  friend Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
  friend Jet1 operator/(Jet1 a, const Jet1& b) { return a /= b; }
  friend Jet1 operator-(const Jet1& a);

 private:
  double value_ = 0.0;
  std::array<double, kDim> grad_{};
};

/// Second-order jet: value, gradient and symmetric Hessian in (x, y, s, t).
///
/// The Hessian is stored as its upper triangle (10 entries), so
/// hess(i, j) and hess(j, i) read the same storage and symmetry is exact.
/// All arithmetic applies the product and chain rules truncated at order 2.
class Jet2 {
 public:
  static constexpr std::size_t kHessSize = kDim * (kDim + 1) / 2;

  constexpr Jet2() = default;
  constexpr Jet2(double value) : value_(value) {}  // NOLINT: implicit constant

  /// Jet of the coordinate function x_k evaluated at `coords`.
  static Jet2 seed(const std::array<double, kDim>& coords, std::size_t k);

  constexpr double value() const { return value_; }
  constexpr double grad(std::size_t i) const { return grad_[i]; }
  double hess(std::size_t i, std::size_t j) const { return hess_[hess_index(i, j)]; }

  /// Partial derivative d/dx_k of this jet, as a first-order jet.
  Jet1 partial(std::size_t k) const;
  /// Drops the second-order part.
  Jet1 first_order() const { return Jet1(value_, grad_); }

  Jet2& operator+=(const Jet2& b);
  Jet2& operator-=(const Jet2& b);
  Jet2& operator*=(const Jet2& b);
  Jet2& operator/=(const Jet2& b);

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
  friend Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
  friend Jet2 operator-(const Jet2& a);

  /// Composes a univariate function with this jet given f(v), f'(v), f''(v).
  Jet2 compose(double f0, double f1, double f2) const;

  static constexpr std::size_t hess_index(std::size_t i, std::size_t j) {
    if (i > j) {
      const std::size_t tmp = i;
      i = j;
      j = tmp;
    }
    // Row-major upper triangle.
    return i * kDim - i * (i - 1) / 2 + (j - i);
  }

 private:
  double value_ = 0.0;
  std::array<double, kDim> grad_{};
  std::array<double, kHessSize> hess_{};
};

Jet2 sqrt(const Jet2& a);
Jet2 pow(const Jet2& a, double r);
Jet2 reciprocal(const Jet2& a);

// Scalar counterparts with the same domain rules, so templated code can be
// instantiated for double and report the same errors.
double sqrt_checked(double v);
double pow_checked(double v, double r);
double reciprocal_checked(double v);

inline Jet2 sqrt_checked(const Jet2& a) { return sqrt(a); }
inline Jet2 pow_checked(const Jet2& a, double r) { return pow(a, r); }
inline Jet2 reciprocal_checked(const Jet2& a) { return reciprocal(a); }

}  // namespace geoverify
