#include "geoverify/jet.hpp"

#include <cmath>

namespace geoverify {

namespace {

bool is_integer(double r) { return std::isfinite(r) && std::floor(r) == r; }

void require_nonzero(double v, const char* op) {
  if (v == 0.0 || !std::isfinite(v)) {
    throw DomainError(std::string(op) + ": pole at value " + std::to_string(v));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Jet1

Jet1& Jet1::operator+=(const Jet1& b) {
  value_ += b.value_;
  for (std::size_t i = 0; i < kDim; ++i) grad_[i] += b.grad_[i];
  return *this;
}

Jet1& Jet1::operator-=(const Jet1& b) {
  value_ -= b.value_;
  for (std::size_t i = 0; i < kDim; ++i) grad_[i] -= b.grad_[i];
  return *this;
}

Jet1& Jet1::operator*=(const Jet1& b) {
  for (std::size_t i = 0; i < kDim; ++i) {
    grad_[i] = value_ * b.grad_[i] + b.value_ * grad_[i];
  }
  value_ *= b.value_;
  return *this;
}

Jet1& Jet1::operator/=(const Jet1& b) {
  require_nonzero(b.value_, "division");
  const double q = value_ / b.value_;
  for (std::size_t i = 0; i < kDim; ++i) {
    grad_[i] = (grad_[i] - q * b.grad_[i]) / b.value_;
  }
  value_ = q;
  return *this;
}

Jet1 operator-(const Jet1& a) {
  std::array<double, kDim> g{};
  for (std::size_t i = 0; i < kDim; ++i) g[i] = -a.grad(i);
  return Jet1(-a.value(), g);
}

// ---------------------------------------------------------------------------
// Jet2

Jet2 Jet2::seed(const std::array<double, kDim>& coords, std::size_t k) {
  if (k >= kDim) throw std::out_of_range("Jet2::seed: variable index out of range");
  Jet2 j(coords[k]);
  j.grad_[k] = 1.0;
  return j;
}

Jet1 Jet2::partial(std::size_t k) const {
  std::array<double, kDim> g{};
  for (std::size_t j = 0; j < kDim; ++j) g[j] = hess(k, j);
  return Jet1(grad_[k], g);
}

Jet2& Jet2::operator+=(const Jet2& b) {
  value_ += b.value_;
  for (std::size_t i = 0; i < kDim; ++i) grad_[i] += b.grad_[i];
  for (std::size_t i = 0; i < kHessSize; ++i) hess_[i] += b.hess_[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& b) {
  value_ -= b.value_;
  for (std::size_t i = 0; i < kDim; ++i) grad_[i] -= b.grad_[i];
  for (std::size_t i = 0; i < kHessSize; ++i) hess_[i] -= b.hess_[i];
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& b) {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      const std::size_t h = hess_index(i, j);
      hess_[h] = value_ * b.hess_[h] + b.value_ * hess_[h] + grad_[i] * b.grad_[j] +
                 grad_[j] * b.grad_[i];
    }
  }
  for (std::size_t i = 0; i < kDim; ++i) {
    grad_[i] = value_ * b.grad_[i] + b.value_ * grad_[i];
  }
  value_ *= b.value_;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& b) { return *this *= reciprocal(b); }

Jet2 operator-(const Jet2& a) { return a.compose(-a.value(), -1.0, 0.0); }

Jet2 Jet2::compose(double f0, double f1, double f2) const {
  Jet2 r(f0);
  for (std::size_t i = 0; i < kDim; ++i) {
    r.grad_[i] = f1 * grad_[i];
    for (std::size_t j = i; j < kDim; ++j) {
      const std::size_t h = hess_index(i, j);
      r.hess_[h] = f1 * hess_[h] + f2 * grad_[i] * grad_[j];
    }
  }
  return r;
}

Jet2 sqrt(const Jet2& a) {
  const double v = a.value();
  if (!(v > 0.0)) {
    throw DomainError("sqrt: non-positive argument " + std::to_string(v));
  }
  const double r = std::sqrt(v);
  return a.compose(r, 0.5 / r, -0.25 / (r * v));
}

Jet2 reciprocal(const Jet2& a) {
  const double v = a.value();
  require_nonzero(v, "reciprocal");
  const double inv = 1.0 / v;
  return a.compose(inv, -inv * inv, 2.0 * inv * inv * inv);
}

Jet2 pow(const Jet2& a, double r) {
  const double v = a.value();
  if (r == 0.0) return Jet2(1.0);
  if (r == 1.0) return a;
  if (!is_integer(r) && !(v > 0.0)) {
    throw DomainError("pow: non-integer exponent of non-positive base " + std::to_string(v));
  }
  if (r < 0.0) require_nonzero(v, "pow");
  const double f0 = std::pow(v, r);
  const double f1 = r * std::pow(v, r - 1.0);
  const double f2 = r * (r - 1.0) * std::pow(v, r - 2.0);
  return a.compose(f0, f1, f2);
}

double sqrt_checked(double v) {
  if (!(v > 0.0)) throw DomainError("sqrt: non-positive argument " + std::to_string(v));
  return std::sqrt(v);
}

double pow_checked(double v, double r) {
  if (!is_integer(r) && !(v > 0.0)) {
    throw DomainError("pow: non-integer exponent of non-positive base " + std::to_string(v));
  }
  if (r < 0.0 && v == 0.0) throw DomainError("pow: pole at zero");
  return std::pow(v, r);
}

double reciprocal_checked(double v) {
  require_nonzero(v, "reciprocal");
  return 1.0 / v;
}

}  // namespace geoverify
