#pragma once

#include <array>

#include "geoverify/jet.hpp"

namespace geoverify {

/// Chart coordinates on F^4. The chart domain is t > 0.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double s = 0.0;
  double t = 1.0;

  std::array<double, kDim> coords() const { return {x, y, s, t}; }
  static Point from_coords(const std::array<double, kDim>& c) { return {c[0], c[1], c[2], c[3]}; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Throws DomainError unless p lies in the chart (finite coordinates, t > 0).
void require_in_chart(const Point& p);

}  // namespace geoverify
