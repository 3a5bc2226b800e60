#pragma once

#include <array>

#include "geoverify/chart.hpp"
#include "geoverify/curvature.hpp"

namespace geoverify {

/// Constants c1..c5 of the soliton family and the soliton constant lambda.
/// lambda is a free input; only lambda = -6 gives a vanishing residual.
struct SolitonParams {
  std::array<double, 5> c{};
  double lambda = -6.0;
};

/// Symmetric bilinear form on the frame, entries[i][j] = B(e_i, e_j).
using SymmetricBilinearValue = Matrix4;
using OneFormValue = Covector;

/// Component order of closedness_defect: (xy, xs, xt, ys, yt, st), each
/// (d omega)_{mu nu} = d_mu omega_nu - d_nu omega_mu.
inline constexpr std::array<std::array<std::size_t, 2>, 6> kTwoFormPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// The Ricci soliton field of F^4 in the coordinate basis:
///
///   xi = 1/2 [(c2 - 12) x + 2 c3 y + 2 c5] d_x - 1/2 [c1 x + (c2 + 12) y - 2 c4] d_y
///      + 1/2 [c1 (s^2 - t^2) + 2 c2 s + 2 c3] d_s + (c1 s + c4) t d_t.
///
/// The -12 terms are present for every choice of constants, so c = 0 gives
/// xi = -6 (x d_x + y d_y), not the zero field.
///
/// The field is a soliton with lambda = -6 only when c2 = c4. Otherwise the
/// residual is diag((c2 - c4)/2, -(c2 - c4)/2, c2 - c4, 0) at every point.
AnalyticVectorField soliton_field(const SolitonParams& params);

/// beta[i][j] = g(nabla_{e_i} xi, e_j).
Matrix4 beta_matrix(const AnalyticVectorField& xi, const Point& p);

/// (L_xi g)(e_i, e_j) = beta_ij + beta_ji.
SymmetricBilinearValue lie_derivative_metric(const AnalyticVectorField& xi, const Point& p);

/// Ric + 1/2 L_xi g - lambda g in the frame. Zero iff (xi, lambda) is a
/// Ricci soliton at p.
SymmetricBilinearValue soliton_residual(const AnalyticVectorField& xi, double lambda, const Point& p);

/// xi-flat = g(xi, .) against (dx, dy, ds, dt).
OneFormValue dual_one_form(const AnalyticVectorField& xi, const Point& p);

/// The six independent components of d(xi-flat), ordered as kTwoFormPairs.
/// xi is locally a gradient iff all of them vanish.
std::array<double, 6> closedness_defect(const AnalyticVectorField& xi, const Point& p);

/// Laplace-Beltrami operator sum_i [e_i(e_i f) - (nabla_{e_i} e_i) f].
double scalar_laplacian(const Expr& f, const Point& p);

double max_abs(const Matrix4& m);

}  // namespace geoverify
