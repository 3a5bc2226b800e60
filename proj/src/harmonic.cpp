#include "geoverify/harmonic.hpp"

#include <cmath>

#include "geoverify/curvature.hpp"

namespace geoverify {

namespace {

// Frame components of X and of nabla_{e_i} X at a point, with one order of
// derivatives kept on the latter.
struct CovariantData {
  Array4<Jet2> x;                     // X_j
  Array44<Jet2> e;                    // frame, e[a][mu]
  Array4<Array44<Jet1>> conn;         // g(nabla_{e_i} e_j, e_k)
  std::array<Array4<Jet1>, kDim> cov; // cov[i][j] = g(nabla_{e_i} X, e_j)
};

CovariantData covariant_data(const AnalyticVectorField& X, const Point& p) {
  CovariantData d;
  d.x = frame_components(X, p);
  d.e = frame_jet(p);
  d.conn = frame_connection_jet(p);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      Jet1 v;
      for (std::size_t mu = 0; mu < kDim; ++mu) v += d.e[i][mu].first_order() * d.x[j].partial(mu);
      for (std::size_t k = 0; k < kDim; ++k) v += d.x[k].first_order() * d.conn[i][k][j];
      d.cov[i][j] = v;
    }
  }
  return d;
}

double along_frame(const Array44<Jet2>& e, std::size_t i, const Jet1& f) {
  double v = 0.0;
  for (std::size_t mu = 0; mu < kDim; ++mu) v += e[i][mu].value() * f.grad(mu);
  return v;
}

}  // namespace

FrameVector rough_laplacian(const AnalyticVectorField& X, const Point& p) {
  const CovariantData d = covariant_data(X, p);
  FrameVector out;
  for (std::size_t j = 0; j < kDim; ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) {
      // nabla_{e_i} nabla_{e_i} X
      v += along_frame(d.e, i, d.cov[i][j]);
      for (std::size_t k = 0; k < kDim; ++k) v += d.cov[i][k].value() * d.conn[i][k][j].value();
      // - nabla_{nabla_{e_i} e_i} X
      for (std::size_t k = 0; k < kDim; ++k) v -= d.conn[i][i][k].value() * d.cov[k][j].value();
    }
    out.comp[j] = v;
  }
  return out;
}

FrameVector harmonic_section_residual(const AnalyticVectorField& X, const Point& p) {
  const auto comps = frame_components(X, p);
  for (std::size_t j = 0; j < kDim; ++j) {
    if (std::abs(comps[j].grad(0)) > 1e-12 || std::abs(comps[j].grad(1)) > 1e-12) {
      throw NotSTOnlyError("frame component " + std::to_string(j + 1) + " depends on x or y");
    }
  }
  return rough_laplacian(X, p);
}

FrameVector horizontal_tension(const AnalyticVectorField& X, const Point& p) {
  const CovariantData d = covariant_data(X, p);
  const RiemannTable r = riemann_frame(p);
  FrameVector out;
  for (std::size_t k = 0; k < kDim; ++k) {
    double v = 0.0;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t a = 0; a < kDim; ++a)
        for (std::size_t b = 0; b < kDim; ++b) {
          v += d.x[a].value() * d.cov[i][b].value() * r(a, b, i, k);
        }
    out.comp[k] = v;
  }
  return out;
}

TensionValue harmonic_map_residual(const AnalyticVectorField& X, const Point& p) {
  return TensionValue{horizontal_tension(X, p), rough_laplacian(X, p)};
}

AnalyticVectorField corollary_field(const CorollaryFamily& fam) {
  const Expr s = Expr::s();
  const Expr t = Expr::t();
  const auto [shift_plus, shift_minus] = fam.exponent_shift;
  switch (fam.index) {
    case 1:
      return AnalyticVectorField::coordinate({fam.c1 + fam.c2 * pow(t, 2.0 + shift_minus), 0.0, 0.0, 0.0});
    case 2: {
      // Frame components follow from d_y = sqrt(t) e2 - s t^{-1/2} e1.
      const Expr r2 = s * s + t * t;
      return AnalyticVectorField::coordinate(
          {0.0, fam.c1 + fam.c2 * pow(t, 2.0 + shift_minus) / (r2 * r2), 0.0, 0.0});
    }
    case 3:
    case 4: {
      const Expr radial = fam.c1 * pow(t, kCorollaryExponentPlus + shift_plus) +
                          fam.c2 * pow(t, kCorollaryExponentMinus + shift_minus);
      if (fam.index == 3) return AnalyticVectorField::coordinate({0.0, 0.0, radial, 0.0});
      return AnalyticVectorField::coordinate({0.0, 0.0, 0.0, radial});
    }
    default:
      throw std::invalid_argument("corollary family index must be 1..4, got " +
                                  std::to_string(fam.index));
  }
}

double max_abs(const FrameVector& v) {
  double r = 0.0;
  for (double c : v.comp) r = std::max(r, std::abs(c));
  return r;
}

}  // namespace geoverify
