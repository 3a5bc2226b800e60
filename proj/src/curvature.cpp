#include "geoverify/curvature.hpp"

namespace geoverify {

namespace {

Array44<Jet1> truncate(const Array44<Jet2>& m) {
  Array44<Jet1> out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) out[i][j] = m[i][j].first_order();
  }
  return out;
}

// d[m][i][j] = d/dx_m of m_ij.
Array4<Array44<Jet1>> partials(const Array44<Jet2>& m) {
  Array4<Array44<Jet1>> d{};
  for (std::size_t k = 0; k < kDim; ++k) {
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) d[k][i][j] = m[i][j].partial(k);
    }
  }
  return d;
}

template <class T>
Tensor3 values(const Array4<Array44<T>>& a) {
  Tensor3 out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      for (std::size_t k = 0; k < kDim; ++k) out[i][j][k] = a[i][j][k].value();
    }
  }
  return out;
}

}  // namespace

Array4<Array44<Jet1>> christoffel_jet(const Point& p) {
  const auto g_jet = metric_jet(p);
  const auto g = truncate(g_jet);
  const auto dg = partials(g_jet);
  const auto g_inv = invert_spd(g);

  Array4<Array44<Jet1>> gamma{};
  for (std::size_t k = 0; k < kDim; ++k) {
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = i; j < kDim; ++j) {
        Jet1 sum;
        for (std::size_t l = 0; l < kDim; ++l) {
          sum += g_inv[k][l] * (dg[i][l][j] + dg[j][l][i] - dg[l][i][j]);
        }
        gamma[k][i][j] = Jet1(0.5) * sum;
        gamma[k][j][i] = gamma[k][i][j];
      }
    }
  }
  return gamma;
}

Christoffel christoffel_at(const Point& p) { return values(christoffel_jet(p)); }

Tensor3 metric_covariant_derivative(const Point& p) {
  const auto g_jet = metric_jet(p);
  const Christoffel gamma = christoffel_at(p);
  Tensor3 out{};
  for (std::size_t k = 0; k < kDim; ++k) {
    for (std::size_t i = 0; i < kDim; ++i) {
      for (std::size_t j = 0; j < kDim; ++j) {
        double v = g_jet[i][j].grad(k);
        for (std::size_t l = 0; l < kDim; ++l) {
          v -= gamma[l][k][i] * g_jet[l][j].value() + gamma[l][k][j] * g_jet[i][l].value();
        }
        out[k][i][j] = v;
      }
    }
  }
  return out;
}

Array4<Array44<Jet1>> frame_connection_jet(const Point& p) {
  const auto e_jet = frame_jet(p);
  const auto e = truncate(e_jet);
  const auto de = partials(e_jet);  // de[mu][a][nu] = d_mu e_a^nu
  const auto g = truncate(metric_jet(p));
  const auto gamma = christoffel_jet(p);

  // Lowered frame: e_flat[k][nu] = g(d_nu, e_k).
  Array44<Jet1> e_flat{};
  for (std::size_t k = 0; k < kDim; ++k) {
    for (std::size_t nu = 0; nu < kDim; ++nu) {
      for (std::size_t rho = 0; rho < kDim; ++rho) e_flat[k][nu] += g[nu][rho] * e[k][rho];
    }
  }

  Array4<Array44<Jet1>> table{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      // (nabla_{e_i} e_j)^nu
      Array4<Jet1> cov{};
      for (std::size_t nu = 0; nu < kDim; ++nu) {
        for (std::size_t mu = 0; mu < kDim; ++mu) {
          Jet1 inner = de[mu][j][nu];
          for (std::size_t sigma = 0; sigma < kDim; ++sigma) inner += gamma[nu][mu][sigma] * e[j][sigma];
          cov[nu] += e[i][mu] * inner;
        }
      }
      for (std::size_t k = 0; k < kDim; ++k) {
        Jet1 v;
        for (std::size_t nu = 0; nu < kDim; ++nu) v += cov[nu] * e_flat[k][nu];
        table[i][j][k] = v;
      }
    }
  }
  return table;
}

FrameConnectionTable frame_connection(const Point& p) {
  return FrameConnectionTable{values(frame_connection_jet(p))};
}

Tensor4 riemann_coordinate(const Point& p) {
  const auto gamma = christoffel_jet(p);
  Tensor4 r{};
  for (std::size_t rho = 0; rho < kDim; ++rho) {
    for (std::size_t sigma = 0; sigma < kDim; ++sigma) {
      for (std::size_t mu = 0; mu < kDim; ++mu) {
        for (std::size_t nu = 0; nu < kDim; ++nu) {
          double v = gamma[rho][nu][sigma].grad(mu) - gamma[rho][mu][sigma].grad(nu);
          for (std::size_t lam = 0; lam < kDim; ++lam) {
            v += gamma[rho][mu][lam].value() * gamma[lam][nu][sigma].value() -
                 gamma[rho][nu][lam].value() * gamma[lam][mu][sigma].value();
          }
          r[rho][sigma][mu][nu] = v;
        }
      }
    }
  }
  return r;
}

RiemannTable riemann_frame(const Point& p) {
  const Tensor4 r = riemann_coordinate(p);
  const Matrix4 g = metric_at(p);
  const auto e = chart_formulas::frame(p.s, p.t);

  // Fully covariant R(d_mu, d_nu, d_sigma, d_tau) = g(R(d_mu, d_nu) d_sigma, d_tau).
  Tensor4 low{};
  for (std::size_t mu = 0; mu < kDim; ++mu)
    for (std::size_t nu = 0; nu < kDim; ++nu)
      for (std::size_t sigma = 0; sigma < kDim; ++sigma)
        for (std::size_t tau = 0; tau < kDim; ++tau) {
          double v = 0.0;
          for (std::size_t rho = 0; rho < kDim; ++rho) v += g[rho][tau] * r[rho][sigma][mu][nu];
          low[mu][nu][sigma][tau] = v;
        }

  // Contract one slot at a time with the frame.
  auto contract_slot = [&e](const Tensor4& in, int slot) {
    Tensor4 out{};
    for (std::size_t a = 0; a < kDim; ++a)
      for (std::size_t b = 0; b < kDim; ++b)
        for (std::size_t c = 0; c < kDim; ++c)
          for (std::size_t d = 0; d < kDim; ++d) {
            double v = 0.0;
            for (std::size_t m = 0; m < kDim; ++m) {
              switch (slot) {
                case 0: v += e[a][m] * in[m][b][c][d]; break;
                case 1: v += e[b][m] * in[a][m][c][d]; break;
                case 2: v += e[c][m] * in[a][b][m][d]; break;
                default: v += e[d][m] * in[a][b][c][m]; break;
              }
            }
            out[a][b][c][d] = v;
          }
    return out;
  };

  Tensor4 frame = low;
  for (int slot = 0; slot < 4; ++slot) frame = contract_slot(frame, slot);
  return RiemannTable{frame};
}

double riemann_frame(const Point& p, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (i >= kDim || j >= kDim || k >= kDim || l >= kDim) {
    throw std::out_of_range("riemann_frame: frame index out of range");
  }
  return riemann_frame(p)(i, j, k, l);
}

RicciMatrix ricci_frame(const Point& p) {
  const RiemannTable r = riemann_frame(p);
  RicciMatrix ric{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t a = 0; a < kDim; ++a) ric[i][j] += r(i, a, a, j);
  return ric;
}

double scalar_curvature(const Point& p) {
  const RicciMatrix ric = ricci_frame(p);
  return ric[0][0] + ric[1][1] + ric[2][2] + ric[3][3];
}

double coercivity_check(const Point& p, const FrameVector& v, double lambda) {
  const RicciMatrix ric = ricci_frame(p);
  double ric_vv = 0.0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) ric_vv += ric[i][j] * v.comp[i] * v.comp[j];
  return ric_vv - lambda * v.norm_squared();
}

}  // namespace geoverify
