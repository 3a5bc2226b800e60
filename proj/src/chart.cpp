#include "geoverify/chart.hpp"

#include <cmath>

namespace geoverify {

void require_in_chart(const Point& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.s) || !std::isfinite(p.t)) {
    throw DomainError("point has non-finite coordinates");
  }
  if (!(p.t > 0.0)) {
    throw DomainError("point outside chart: t = " + std::to_string(p.t) + " (need t > 0)");
  }
}

namespace {

Array4<Jet2> seeded(const Point& p) {
  const auto c = p.coords();
  return {Jet2::seed(c, 0), Jet2::seed(c, 1), Jet2::seed(c, 2), Jet2::seed(c, 3)};
}

AnalyticVectorField combine(const AnalyticVectorField& a, const AnalyticVectorField& b, double sign) {
  if (a.basis != b.basis) throw BasisMismatch("cannot combine frame and coordinate fields");
  AnalyticVectorField r{a.basis, {}};
  for (std::size_t i = 0; i < kDim; ++i) {
    r.components[i] = sign > 0 ? a.components[i] + b.components[i] : a.components[i] - b.components[i];
  }
  return r;
}

}  // namespace

AnalyticVectorField operator+(const AnalyticVectorField& a, const AnalyticVectorField& b) {
  return combine(a, b, 1.0);
}

AnalyticVectorField operator-(const AnalyticVectorField& a, const AnalyticVectorField& b) {
  return combine(a, b, -1.0);
}

AnalyticVectorField operator*(const Expr& f, const AnalyticVectorField& a) {
  AnalyticVectorField r{a.basis, {}};
  for (std::size_t i = 0; i < kDim; ++i) r.components[i] = f * a.components[i];
  return r;
}

Matrix4 metric_at(const Point& p) {
  require_in_chart(p);
  return chart_formulas::metric(p.s, p.t);
}

Matrix4 inverse_metric_at(const Point& p) {
  require_in_chart(p);
  const double s = p.s;
  const double t = p.t;
  Matrix4 gi{};
  gi[0][0] = t + s * s / t;
  gi[0][1] = s / t;
  gi[1][0] = gi[0][1];
  gi[1][1] = 1.0 / t;
  gi[2][2] = 4.0 * t * t;
  gi[3][3] = 4.0 * t * t;
  return gi;
}

std::array<CoordVector, kDim> frame_at(const Point& p) {
  require_in_chart(p);
  const auto e = chart_formulas::frame(p.s, p.t);
  std::array<CoordVector, kDim> out{};
  for (std::size_t a = 0; a < kDim; ++a) out[a].comp = e[a];
  return out;
}

std::array<Covector, kDim> coframe_at(const Point& p) {
  require_in_chart(p);
  const auto th = chart_formulas::coframe(p.s, p.t);
  std::array<Covector, kDim> out{};
  for (std::size_t a = 0; a < kDim; ++a) out[a].comp = th[a];
  return out;
}

FrameVector to_frame(const CoordVector& v, const Point& p) {
  require_in_chart(p);
  const auto th = chart_formulas::coframe(p.s, p.t);
  FrameVector out;
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t mu = 0; mu < kDim; ++mu) out.comp[a] += th[a][mu] * v.comp[mu];
  }
  return out;
}

CoordVector to_coord(const FrameVector& v, const Point& p) {
  require_in_chart(p);
  const auto e = chart_formulas::frame(p.s, p.t);
  CoordVector out;
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t mu = 0; mu < kDim; ++mu) out.comp[mu] += v.comp[a] * e[a][mu];
  }
  return out;
}

double inner(const CoordVector& u, const CoordVector& v, const Point& p) {
  const Matrix4 g = metric_at(p);
  double r = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) r += u.comp[i] * g[i][j] * v.comp[j];
  }
  return r;
}

Array44<Jet2> metric_jet(const Point& p) {
  require_in_chart(p);
  const auto v = seeded(p);
  return chart_formulas::metric(v[2], v[3]);
}

Array44<Jet2> frame_jet(const Point& p) {
  require_in_chart(p);
  const auto v = seeded(p);
  return chart_formulas::frame(v[2], v[3]);
}

Array44<Jet2> coframe_jet(const Point& p) {
  require_in_chart(p);
  const auto v = seeded(p);
  return chart_formulas::coframe(v[2], v[3]);
}

Array4<Jet2> frame_components(const AnalyticVectorField& X, const Point& p) {
  require_in_chart(p);
  Array4<Jet2> c;
  for (std::size_t i = 0; i < kDim; ++i) c[i] = X.components[i].jet(p);
  if (X.basis == Basis::kFrame) return c;

  const auto th = coframe_jet(p);
  Array4<Jet2> out{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t mu = 0; mu < kDim; ++mu) {
      out[a] += th[a][mu] * c[mu];
    }
  }
  return out;
}

Array4<Jet2> coordinate_components(const AnalyticVectorField& X, const Point& p) {
  require_in_chart(p);
  Array4<Jet2> c;
  for (std::size_t i = 0; i < kDim; ++i) c[i] = X.components[i].jet(p);
  if (X.basis == Basis::kCoordinate) return c;

  const auto e = frame_jet(p);
  Array4<Jet2> out{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t mu = 0; mu < kDim; ++mu) {
      out[mu] += c[a] * e[a][mu];
    }
  }
  return out;
}

}  // namespace geoverify
