#pragma once

#include "geoverify/chart.hpp"

namespace geoverify {

/// Coordinate Christoffel symbols, indexed [k][i][j] = Gamma^k_ij.
using Christoffel = Tensor3;

/// gamma[i][j][k] = g(nabla_{e_i} e_j, e_k) for the orthonormal frame.
struct FrameConnectionTable {
  Tensor3 gamma{};
  double operator()(std::size_t i, std::size_t j, std::size_t k) const { return gamma[i][j][k]; }
};

/// r[i][j][k][l] = g(R(e_i, e_j) e_k, e_l) with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
struct RiemannTable {
  Tensor4 r{};
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return r[i][j][k][l];
  }
};

/// Ric[i][j] = sum_a g(R(e_i, e_a) e_a, e_j), frame basis.
using RicciMatrix = Matrix4;

Christoffel christoffel_at(const Point& p);
/// Christoffel symbols with their first derivatives, from the metric jet.
Array4<Array44<Jet1>> christoffel_jet(const Point& p);

/// Components nabla_k g_ij; all vanish for the Levi-Civita connection.
Tensor3 metric_covariant_derivative(const Point& p);

FrameConnectionTable frame_connection(const Point& p);
/// Frame connection coefficients with their first derivatives along the
/// chart variables.
Array4<Array44<Jet1>> frame_connection_jet(const Point& p);

/// Coordinate Riemann tensor, indexed [rho][sigma][mu][nu] with
/// R(d_mu, d_nu) d_sigma = R^rho_{sigma mu nu} d_rho.
Tensor4 riemann_coordinate(const Point& p);

RiemannTable riemann_frame(const Point& p);
/// Single component g(R(e_i, e_j) e_k, e_l); indices are 0-based.
double riemann_frame(const Point& p, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

RicciMatrix ricci_frame(const Point& p);
double scalar_curvature(const Point& p);

/// Ric(v, v) - lambda g(v, v) for a frame vector v.
double coercivity_check(const Point& p, const FrameVector& v, double lambda);

}  // namespace geoverify
