#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "geoverify/expr.hpp"
#include "geoverify/jet.hpp"
#include "geoverify/point.hpp"

namespace geoverify {

using Matrix4 = std::array<std::array<double, kDim>, kDim>;
using Tensor3 = std::array<Matrix4, kDim>;
using Tensor4 = std::array<Tensor3, kDim>;

template <class T>
using Array4 = std::array<T, kDim>;
template <class T>
using Array44 = std::array<std::array<T, kDim>, kDim>;

/// Components against the coordinate basis (d/dx, d/dy, d/ds, d/dt).
struct CoordVector {
  std::array<double, kDim> comp{};
};

/// Components against the orthonormal frame (e1, e2, e3, e4). Frame indices
/// are 0-based throughout the library: comp[0] is the e1 component.
struct FrameVector {
  std::array<double, kDim> comp{};

  double norm_squared() const {
    double n = 0.0;
    for (double c : comp) n += c * c;
    return n;
  }
};

/// Covector components against (dx, dy, ds, dt).
struct Covector {
  std::array<double, kDim> comp{};
};

enum class Basis { kFrame, kCoordinate };

/// Raised when two fields in different bases are combined.
class BasisMismatch : public std::invalid_argument {
 public:
  explicit BasisMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Vector field with closed-form components and an explicit basis tag.
/// Fields are never converted between bases behind the caller's back.
struct AnalyticVectorField {
  Basis basis = Basis::kCoordinate;
  std::array<Expr, kDim> components{};

  static AnalyticVectorField frame(std::array<Expr, kDim> c) { return {Basis::kFrame, std::move(c)}; }
  static AnalyticVectorField coordinate(std::array<Expr, kDim> c) {
    return {Basis::kCoordinate, std::move(c)};
  }
  static AnalyticVectorField zero(Basis b = Basis::kFrame) { return {b, {}}; }

  friend AnalyticVectorField operator+(const AnalyticVectorField& a, const AnalyticVectorField& b);
  friend AnalyticVectorField operator-(const AnalyticVectorField& a, const AnalyticVectorField& b);
  friend AnalyticVectorField operator*(const Expr& f, const AnalyticVectorField& a);
};

// ---------------------------------------------------------------------------
// Chart geometry, generic in the scalar type so that the same formulas give
// values (double) and derivatives (Jet2).

namespace chart_formulas {

/// g_ij in the coordinate basis.
template <class T>
Array44<T> metric(const T& s, const T& t) {
  const T inv_t = reciprocal_checked(t);
  const T quarter_inv_t2 = T(0.25) * inv_t * inv_t;
  Array44<T> g{};
  g[0][0] = inv_t;
  g[0][1] = -(s * inv_t);
  g[1][0] = g[0][1];
  g[1][1] = (s * s + t * t) * inv_t;
  g[2][2] = quarter_inv_t2;
  g[3][3] = quarter_inv_t2;
  return g;
}

/// frame[a][mu]: the d/dx_mu component of e_{a+1}.
template <class T>
Array44<T> frame(const T& s, const T& t) {
  const T root_t = sqrt_checked(t);
  const T inv_root_t = reciprocal_checked(root_t);
  Array44<T> e{};
  e[0][0] = root_t;
  e[1][0] = s * inv_root_t;
  e[1][1] = inv_root_t;
  e[2][2] = T(2.0) * t;
  e[3][3] = T(2.0) * t;
  return e;
}

/// coframe[a][mu]: the dx_mu component of theta^{a+1}.
template <class T>
Array44<T> coframe(const T& s, const T& t) {
  const T root_t = sqrt_checked(t);
  const T inv_root_t = reciprocal_checked(root_t);
  const T half_inv_t = T(0.5) * reciprocal_checked(t);
  Array44<T> th{};
  th[0][0] = inv_root_t;
  th[0][1] = -(s * inv_root_t);
  th[1][1] = root_t;
  th[2][2] = half_inv_t;
  th[3][3] = half_inv_t;
  return th;
}

}  // namespace chart_formulas

Matrix4 metric_at(const Point& p);
/// Closed-form inverse metric g^ij.
Matrix4 inverse_metric_at(const Point& p);

std::array<CoordVector, kDim> frame_at(const Point& p);
std::array<Covector, kDim> coframe_at(const Point& p);

FrameVector to_frame(const CoordVector& v, const Point& p);
CoordVector to_coord(const FrameVector& v, const Point& p);

/// g(u, v) for coordinate-basis vectors.
double inner(const CoordVector& u, const CoordVector& v, const Point& p);

// Jets of the chart data at p, seeded in all four variables.
Array44<Jet2> metric_jet(const Point& p);
Array44<Jet2> frame_jet(const Point& p);
Array44<Jet2> coframe_jet(const Point& p);

/// Frame components of X at p as jets (coordinate fields are contracted with
/// the coframe).
Array4<Jet2> frame_components(const AnalyticVectorField& X, const Point& p);
/// Coordinate components of X at p as jets.
Array4<Jet2> coordinate_components(const AnalyticVectorField& X, const Point& p);

/// Inverse of a symmetric positive definite 4x4 matrix by Gauss-Jordan
/// elimination without pivoting, generic in the scalar type.
template <class T>
Array44<T> invert_spd(Array44<T> a) {
  Array44<T> inv{};
  for (std::size_t i = 0; i < kDim; ++i) inv[i][i] = T(1.0);
  for (std::size_t col = 0; col < kDim; ++col) {
    const T pivot_inv = T(1.0) / a[col][col];
    for (std::size_t j = 0; j < kDim; ++j) {
      a[col][j] = a[col][j] * pivot_inv;
      inv[col][j] = inv[col][j] * pivot_inv;
    }
    for (std::size_t row = 0; row < kDim; ++row) {
      if (row == col) continue;
      const T factor = a[row][col];
      for (std::size_t j = 0; j < kDim; ++j) {
        a[row][j] = a[row][j] - factor * a[col][j];
        inv[row][j] = inv[row][j] - factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace geoverify
