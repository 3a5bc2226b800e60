#include "geoverify/soliton.hpp"

#include <cmath>

namespace geoverify {

AnalyticVectorField soliton_field(const SolitonParams& params) {
  const auto [c1, c2, c3, c4, c5] = params.c;
  const Expr x = Expr::x();
  const Expr y = Expr::y();
  const Expr s = Expr::s();
  const Expr t = Expr::t();
  return AnalyticVectorField::coordinate({
      0.5 * ((c2 - 12.0) * x + 2.0 * c3 * y + 2.0 * c5),
      -0.5 * (c1 * x + (c2 + 12.0) * y - 2.0 * c4),
      0.5 * (c1 * (s * s - t * t) + 2.0 * c2 * s + 2.0 * c3),
      (c1 * s + c4) * t,
  });
}

namespace {

// e_i(f) for a jet f at p, using the frame values at p.
double along_frame(const Array44<Jet2>& e, std::size_t i, const Jet2& f) {
  double v = 0.0;
  for (std::size_t mu = 0; mu < kDim; ++mu) v += e[i][mu].value() * f.grad(mu);
  return v;
}

}  // namespace

Matrix4 beta_matrix(const AnalyticVectorField& xi, const Point& p) {
  const auto alpha = frame_components(xi, p);
  const auto e = frame_jet(p);
  const FrameConnectionTable conn = frame_connection(p);
  Matrix4 beta{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      double v = along_frame(e, i, alpha[j]);
      for (std::size_t k = 0; k < kDim; ++k) v += alpha[k].value() * conn(i, k, j);
      beta[i][j] = v;
    }
  }
  return beta;
}

SymmetricBilinearValue lie_derivative_metric(const AnalyticVectorField& xi, const Point& p) {
  const Matrix4 beta = beta_matrix(xi, p);
  SymmetricBilinearValue lie{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) lie[i][j] = beta[i][j] + beta[j][i];
  }
  return lie;
}

SymmetricBilinearValue soliton_residual(const AnalyticVectorField& xi, double lambda, const Point& p) {
  const RicciMatrix ric = ricci_frame(p);
  const SymmetricBilinearValue lie = lie_derivative_metric(xi, p);
  SymmetricBilinearValue res{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      res[i][j] = ric[i][j] + 0.5 * lie[i][j] - (i == j ? lambda : 0.0);
    }
  }
  return res;
}

namespace {

Array4<Jet2> flat_jet(const AnalyticVectorField& xi, const Point& p) {
  const auto g = metric_jet(p);
  const auto v = coordinate_components(xi, p);
  Array4<Jet2> flat{};
  for (std::size_t mu = 0; mu < kDim; ++mu) {
    for (std::size_t nu = 0; nu < kDim; ++nu) flat[mu] += g[mu][nu] * v[nu];
  }
  return flat;
}

}  // namespace

OneFormValue dual_one_form(const AnalyticVectorField& xi, const Point& p) {
  const auto flat = flat_jet(xi, p);
  OneFormValue out;
  for (std::size_t mu = 0; mu < kDim; ++mu) out.comp[mu] = flat[mu].value();
  return out;
}

std::array<double, 6> closedness_defect(const AnalyticVectorField& xi, const Point& p) {
  const auto flat = flat_jet(xi, p);
  std::array<double, 6> d{};
  for (std::size_t n = 0; n < kTwoFormPairs.size(); ++n) {
    const auto [mu, nu] = kTwoFormPairs[n];
    d[n] = flat[nu].grad(mu) - flat[mu].grad(nu);
  }
  return d;
}

double scalar_laplacian(const Expr& f, const Point& p) {
  require_in_chart(p);
  const Jet2 fj = f.jet(p);
  const auto e_jet = frame_jet(p);
  const FrameConnectionTable conn = frame_connection(p);

  double lap = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) {
    // e_i(f) as a first-order jet, then e_i applied once more.
    Jet1 ei_f;
    for (std::size_t mu = 0; mu < kDim; ++mu) ei_f += e_jet[i][mu].first_order() * fj.partial(mu);
    double ei_ei_f = 0.0;
    for (std::size_t mu = 0; mu < kDim; ++mu) ei_ei_f += e_jet[i][mu].value() * ei_f.grad(mu);

    double div_term = 0.0;
    for (std::size_t k = 0; k < kDim; ++k) div_term += conn(i, i, k) * along_frame(e_jet, k, fj);
    lap += ei_ei_f - div_term;
  }
  return lap;
}

double max_abs(const Matrix4& m) {
  double r = 0.0;
  for (const auto& row : m)
    for (double v : row) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace geoverify
