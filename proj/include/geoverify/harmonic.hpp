#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "geoverify/chart.hpp"

namespace geoverify {

/// Raised by harmonic_section_residual when the field depends on x or y.
class NotSTOnlyError : public std::invalid_argument {
 public:
  explicit NotSTOnlyError(const std::string& what) : std::invalid_argument(what) {}
};

/// Tension of X viewed as a map into TM with the Sasaki metric: the
/// horizontal part Tr_g R(X, nabla. X). and the vertical part Tr_g nabla^2 X.
struct TensionValue {
  FrameVector horizontal;
  FrameVector vertical;
};

/// One of the four harmonic-section families
///   1: (c1 + c2 t^2) d_x
///   2: (c1 + c2 t^2 / (s^2 + t^2)^2) d_y
///   3: (c1 t^{p+} + c2 t^{p-}) d_s
///   4: (c1 t^{p+} + c2 t^{p-}) d_t
/// with p+- = 3/2 +- sqrt(7)/2.
///
/// exponent_shift perturbs the exponents: for families 3 and 4 it is added to
/// (p+, p-); for families 1 and 2 its second entry is added to the power of t
/// multiplying c2. Zero shift gives the harmonic family.
struct CorollaryFamily {
  int index = 1;
  double c1 = 1.0;
  double c2 = 0.0;
  std::array<double, 2> exponent_shift{0.0, 0.0};
};

inline const double kCorollaryExponentPlus = 1.5 + 0.5 * std::sqrt(7.0);
inline const double kCorollaryExponentMinus = 1.5 - 0.5 * std::sqrt(7.0);

/// Rough Laplacian sum_i [nabla_{e_i} nabla_{e_i} X - nabla_{nabla_{e_i} e_i} X]
/// in frame components, from the frame connection and its derivatives.
FrameVector rough_laplacian(const AnalyticVectorField& X, const Point& p);

/// Rough Laplacian of a field whose frame components depend only on (s, t).
/// Throws NotSTOnlyError otherwise.
FrameVector harmonic_section_residual(const AnalyticVectorField& X, const Point& p);

/// Component k = sum_i g(R(X, nabla_{e_i} X) e_i, e_k).
FrameVector horizontal_tension(const AnalyticVectorField& X, const Point& p);

TensionValue harmonic_map_residual(const AnalyticVectorField& X, const Point& p);

/// The family member as a coordinate-basis field.
AnalyticVectorField corollary_field(const CorollaryFamily& fam);

double max_abs(const FrameVector& v);

}  // namespace geoverify
