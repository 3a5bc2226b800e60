#include <random>

#include "doctest.h"
#include "geoverify/checks.hpp"
#include "geoverify/soliton.hpp"
#include "oracles.hpp"

using namespace geoverify;

namespace {

std::array<double, 5> random_constants(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  return {c(rng), c(rng), c(rng), c(rng), c(rng)};
}

AnalyticVectorField frame_field(double a1, double a2, double a3, double a4) {
  return AnalyticVectorField::frame({a1, a2, a3, a4});
}

// d[i][j] = e_i(alpha_j), taken from the jets of the frame components.
Matrix4 frame_derivatives(const AnalyticVectorField& xi, const Point& p) {
  const auto alpha = frame_components(xi, p);
  const auto e = frame_at(p);
  Matrix4 d{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t mu = 0; mu < 4; ++mu) d[i][j] += e[i].comp[mu] * alpha[j].grad(mu);
  return d;
}

// The beta matrix as displayed, entry by entry.
Matrix4 displayed_beta(const AnalyticVectorField& xi, const Point& p) {
  const auto jets = frame_components(xi, p);
  const double a1 = jets[0].value(), a2 = jets[1].value(), a3 = jets[2].value(), a4 = jets[3].value();
  const Matrix4 d = frame_derivatives(xi, p);
  auto da = [&d](int j, int i) { return d[i - 1][j - 1]; };  // alpha_{j;i}
  return Matrix4{{
      {da(1, 1) - a4, da(2, 1) - a3, da(3, 1) + a2, da(4, 1) + a1},
      {da(1, 2) - a3, da(2, 2) + a4, da(3, 2) + a1, da(4, 2) - a2},
      {da(1, 3) + a2, da(2, 3) - a1, da(3, 3) - 2 * a4, da(4, 3) + 2 * a3},
      {da(1, 4), da(2, 4), da(3, 4), da(4, 4)},
  }};
}

// The E matrix as displayed, with the Ricci values substituted.
Matrix4 displayed_e_matrix(const AnalyticVectorField& xi, double lambda, const Point& p) {
  const auto jets = frame_components(xi, p);
  const double a1 = jets[0].value(), a2 = jets[1].value(), a3 = jets[2].value(), a4 = jets[3].value();
  const Matrix4 d = frame_derivatives(xi, p);
  auto da = [&d](int j, int i) { return d[i - 1][j - 1]; };
  Matrix4 e{};
  e[0][0] = da(1, 1) - a4 - lambda;
  e[0][1] = da(2, 1) - 2 * a3 + da(1, 2);
  e[0][2] = da(3, 1) + 2 * a2 + da(1, 3);
  e[0][3] = da(4, 1) + a1 + da(1, 4);
  e[1][1] = da(2, 2) + a4 - lambda;
  e[1][2] = da(3, 2) + da(2, 3);
  e[1][3] = da(4, 2) - a2 + da(2, 4);
  e[2][2] = da(3, 3) - 2 * a4 - lambda - 6;
  e[2][3] = da(4, 3) + 2 * a3 + da(3, 4);
  e[3][3] = da(4, 4) - lambda - 6;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) e[i][j] = e[j][i];
  return e;
}

// The E system written with coordinate partial derivatives.
std::array<double, 10> displayed_e_system(const AnalyticVectorField& xi, double lambda, const Point& p) {
  const auto a = frame_components(xi, p);
  const double t = p.t, s = p.s, rt = std::sqrt(t);
  auto v = [&a](int j) { return a[j - 1].value(); };
  auto dx = [&a](int j) { return a[j - 1].grad(0); };
  auto dy = [&a](int j) { return a[j - 1].grad(1); };
  auto ds = [&a](int j) { return a[j - 1].grad(2); };
  auto dt = [&a](int j) { return a[j - 1].grad(3); };
  return {
      rt * dx(1) - v(4) - lambda,
      rt * dx(2) - 2 * v(3) + s / rt * dx(1) + dy(1) / rt,
      rt * dx(3) + 2 * v(2) + 2 * t * ds(1),
      rt * dx(4) + v(1) + 2 * t * dt(1),
      s / rt * dx(2) + dy(2) / rt + v(4) - lambda,
      s / rt * dx(3) + dy(3) / rt + 2 * t * ds(2),
      s / rt * dx(4) + dy(4) / rt - v(2) + 2 * t * dt(2),
      2 * t * ds(3) - 2 * v(4) - lambda - 6,
      2 * t * ds(4) + 2 * v(3) + 2 * t * dt(3),
      2 * t * dt(4) - lambda - 6,
  };
}

std::array<oracle::ScalarFn, 4> coordinate_fns(const AnalyticVectorField& xi) {
  REQUIRE(xi.basis == Basis::kCoordinate);
  return {oracle::as_fn(xi.components[0]), oracle::as_fn(xi.components[1]),
          oracle::as_fn(xi.components[2]), oracle::as_fn(xi.components[3])};
}

}  // namespace

TEST_CASE("soliton field components") {
  const Point p{0.7, -1.3, 0.4, 1.6};
  const auto base = soliton_field(SolitonParams{});
  // c = 0 leaves the homothetic part -6 (x d_x + y d_y).
  CHECK(base.components[0].value(p) == doctest::Approx(-6.0 * p.x));
  CHECK(base.components[1].value(p) == doctest::Approx(-6.0 * p.y));
  CHECK(base.components[2].value(p) == 0.0);
  CHECK(base.components[3].value(p) == 0.0);

  // The c5 part is d_x.
  const auto c5 = soliton_field(SolitonParams{{0, 0, 0, 0, 1}}) - base;
  CHECK(c5.components[0].value(p) == doctest::Approx(1.0));
  CHECK(c5.components[1].value(p) == 0.0);
  CHECK(c5.components[2].value(p) == 0.0);
  CHECK(c5.components[3].value(p) == 0.0);

  // The c4 part is d_y + t d_t.
  const auto c4 = soliton_field(SolitonParams{{0, 0, 0, 1, 0}}) - base;
  CHECK(c4.components[0].value(p) == 0.0);
  CHECK(c4.components[1].value(p) == doctest::Approx(1.0));
  CHECK(c4.components[2].value(p) == 0.0);
  CHECK(c4.components[3].value(p) == doctest::Approx(p.t));
}

TEST_CASE("beta matrix for simple fields") {
  const Point p{0.2, 0.3, -0.4, 0.9};
  const Matrix4 b = beta_matrix(frame_field(0, 0, 0, 1), p);
  CHECK(b[0][0] == doctest::Approx(-1.0));
  CHECK(std::abs(b[2][3]) < 1e-12);
  CHECK(b[2][2] == doctest::Approx(-2.0));
  CHECK(max_abs(beta_matrix(AnalyticVectorField::zero(), p)) == 0.0);
  CHECK_THROWS_AS(beta_matrix(frame_field(0, 0, 0, 1), {0, 0, 0, 0}), DomainError);
}

TEST_CASE("beta matrix matches the displayed expansion") {
  std::mt19937_64 rng(21);
  const Expr x = Expr::x(), y = Expr::y(), s = Expr::s(), t = Expr::t();
  for (int n = 0; n < 100; ++n) {
    const Point p = oracle::random_point(rng);
    const auto c = random_constants(rng);
    // A generic field with dependence on every coordinate, plus the soliton field.
    const auto generic = AnalyticVectorField::frame(
        {c[0] * x * s + t, c[1] * y * y + s * t, c[2] * sqrt(t) + x, c[3] / t + c[4] * x * y});
    for (const auto& xi : {generic, soliton_field(SolitonParams{c})}) {
      const Matrix4 got = beta_matrix(xi, p);
      const Matrix4 want = displayed_beta(xi, p);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(got[i][j] - want[i][j]) < 1e-9);
    }
  }
}

TEST_CASE("Lie derivative against a finite-difference oracle") {
  std::mt19937_64 rng(22);
  const Expr x = Expr::x(), y = Expr::y(), s = Expr::s(), t = Expr::t();
  const auto dx = AnalyticVectorField::coordinate({1.0, 0.0, 0.0, 0.0});
  const auto dy = AnalyticVectorField::coordinate({0.0, 1.0, 0.0, 0.0});
  const auto generic = AnalyticVectorField::coordinate({x * s, y + t * t, s * t, sqrt(t) * x});
  for (int n = 0; n < 20; ++n) {
    const Point p = oracle::random_point(rng);
    // d_x and d_y are Killing: the metric only depends on (s, t).
    CHECK(max_abs(lie_derivative_metric(dx, p)) < 1e-9);
    CHECK(max_abs(lie_derivative_metric(dy, p)) < 1e-9);

    for (const auto& xi : {dx, generic, soliton_field(SolitonParams{random_constants(rng)})}) {
      const Matrix4 want = oracle::to_frame_bilinear(oracle::fd_lie_derivative_coord(coordinate_fns(xi), p), p);
      const Matrix4 got = lie_derivative_metric(xi, p);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          CHECK(got[i][j] == doctest::Approx(want[i][j]).epsilon(1e-6));
          CHECK(got[i][j] == got[j][i]);
        }
    }
  }
  CHECK(max_abs(lie_derivative_metric(AnalyticVectorField::zero(), {0, 0, 0, 1})) == 0.0);
}

TEST_CASE("soliton residual at lambda = -6") {
  // Hand computation: on top of the solution, the c2 part of the field
  // (c2/2)(x d_x - y d_y) + c2 s d_s and the c4 part y-translation + t d_t
  // change L g on the diagonal only. (L_xi g)_xx = (c2 - c4)/t, so in the
  // frame the residual is diag((c2 - c4)/2, -(c2 - c4)/2, c2 - c4, 0).
  std::mt19937_64 rng(23);
  for (int n = 0; n < 100; ++n) {
    const Point p = oracle::random_point(rng);
    const auto c = random_constants(rng);
    const Matrix4 res = soliton_residual(soliton_field(SolitonParams{c}), -6.0, p);
    const double d = c[1] - c[3];
    const std::array<double, 4> diag{0.5 * d, -0.5 * d, d, 0.0};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(res[i][j] - (i == j ? diag[i] : 0.0)) < 1e-9);

    // On c2 = c4 the field is a soliton.
    auto on = c;
    on[3] = on[1];
    CHECK(max_abs(soliton_residual(soliton_field(SolitonParams{on}), -6.0, p)) < 1e-9);
  }

  // With c4 = 1 the (4,4) entry reads Ric_44 + 1/2 (L g)_44 = -6.
  const Point p{0.1, 0.2, 0.3, 0.4};
  const auto c4 = soliton_field(SolitonParams{{0, 0, 0, 1, 0}});
  CHECK(soliton_residual(c4, 0.0, p)[3][3] == doctest::Approx(-6.0));
  CHECK(std::abs(-6.0 + 0.5 * lie_derivative_metric(c4, p)[3][3] + 6.0) < 1e-9);

  // Zero field: the residual is Ric itself.
  const Matrix4 ric = soliton_residual(AnalyticVectorField::zero(), 0.0, p);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(ric[i][j] - ((i == j && i >= 2) ? -6.0 : 0.0)) < 1e-9);
    }
}

TEST_CASE("lambda shifts exactly the diagonal") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> lam(-20.0, 20.0);
  for (int n = 0; n < 50; ++n) {
    const Point p = oracle::random_point(rng);
    const auto xi = soliton_field(SolitonParams{random_constants(rng)});
    const double lambda = lam(rng);
    const Matrix4 base = soliton_residual(xi, -6.0, p);
    const Matrix4 res = soliton_residual(xi, lambda, p);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const double expected = base[i][j] + (i == j ? -6.0 - lambda : 0.0);
        CHECK(std::abs(res[i][j] - expected) < 1e-9);
      }
    // Entry (4,4) carries no c-dependence, so it isolates the shift.
    CHECK(std::abs(std::abs(res[3][3]) - std::abs(lambda + 6.0)) < 1e-9);
    CHECK(max_abs(res) >= std::abs(lambda + 6.0) - 1e-9);
  }
}

TEST_CASE("residual equals the E matrix, off-diagonal entries halved") {
  std::mt19937_64 rng(25);
  const Expr x = Expr::x(), y = Expr::y(), s = Expr::s(), t = Expr::t();
  for (int n = 0; n < 100; ++n) {
    const Point p = oracle::random_point(rng);
    const auto c = random_constants(rng);
    const double lambda = c[0] - 6.0;
    const auto generic =
        AnalyticVectorField::frame({c[1] * x * t + s, y * s - c[2], t * t + c[3] * x, c[4] * s * y + t});
    for (const auto& xi : {generic, soliton_field(SolitonParams{c})}) {
      const Matrix4 res = soliton_residual(xi, lambda, p);
      const Matrix4 e = displayed_e_matrix(xi, lambda, p);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          const double scale = i == j ? 1.0 : 2.0;
          CHECK(std::abs(scale * res[i][j] - e[i][j]) < 1e-9);
        }
      const auto sys = displayed_e_system(xi, lambda, p);
      const std::array<std::pair<int, int>, 10> slots{
          {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};
      for (std::size_t k = 0; k < slots.size(); ++k) {
        CHECK(std::abs(sys[k] - e[slots[k].first][slots[k].second]) < 1e-9);
      }
    }
  }
}

TEST_CASE("soliton field is affine in the constants") {
  std::mt19937_64 rng(26);
  for (int n = 0; n < 20; ++n) {
    auto a = random_constants(rng);
    auto b = random_constants(rng);
    a[3] = a[1];
    b[3] = b[1];
    std::array<double, 5> sum{};
    for (std::size_t i = 0; i < 5; ++i) sum[i] = a[i] + b[i];
    const Point p = oracle::random_point(rng);
    // Sums stay inside the soliton subspace c2 = c4.
    CHECK(max_abs(soliton_residual(soliton_field(SolitonParams{sum}), -6.0, p)) < 1e-9);
    // The constants enter linearly on top of the fixed homothetic part.
    const auto base = soliton_field(SolitonParams{});
    const auto lhs = soliton_field(SolitonParams{sum}) - base;
    const auto rhs = (soliton_field(SolitonParams{a}) - base) + (soliton_field(SolitonParams{b}) - base);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(lhs.components[k].value(p) == doctest::Approx(rhs.components[k].value(p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("dual one-form and closedness defect") {
  const auto c3 = soliton_field(SolitonParams{{0, 0, 1, 0, 0}});
  // xi-flat_s = (1/(4t^2)) xi^s; with x = y = 0 the homothetic part drops out.
  const OneFormValue flat = dual_one_form(c3, {0, 0, 0.5, 2.0});
  CHECK(flat.comp[2] == doctest::Approx(1.0 / 16.0));
  CHECK(flat.comp[3] == 0.0);

  CHECK(closedness_defect(c3, {0, 0, 0, 1})[5] == doctest::Approx(0.5));
  std::mt19937_64 rng(27);
  for (int n = 0; n < 50; ++n) {
    const Point p = oracle::random_point(rng);
    CHECK(closedness_defect(c3, p)[5] == doctest::Approx(0.5 / (p.t * p.t * p.t)).epsilon(1e-12));
  }

  // grad t = g^{-1} dt = 4 t^2 d_t is closed.
  const Expr t = Expr::t();
  const auto grad_t = AnalyticVectorField::coordinate({0.0, 0.0, 0.0, 4.0 * t * t});
  for (double d : closedness_defect(grad_t, {0.3, 0.1, -0.7, 1.4})) CHECK(std::abs(d) < 1e-9);

  // c1 = 1 at (0,0,1,1): d_s(s/(4t)) - d_t((s^2 - t^2)/(8t^2)) = 1/(4t) + s^2/(4t^3) = 1/2.
  const auto c1 = soliton_field(SolitonParams{{1, 0, 0, 0, 0}});
  const double st = closedness_defect(c1, {0, 0, 1, 1})[5];
  CHECK(st == doctest::Approx(0.5));
  CHECK(std::abs(st) > 1e-3);
}

TEST_CASE("closedness defect against finite differences of the dual form") {
  std::mt19937_64 rng(28);
  for (int n = 0; n < 10; ++n) {
    const auto xi = soliton_field(SolitonParams{random_constants(rng)});
    const Point p = oracle::random_point(rng);
    const auto fns = coordinate_fns(xi);
    std::array<oracle::ScalarFn, 4> flat;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      flat[mu] = [fns, mu](const oracle::Coords& q) {
        const Matrix4 g = metric_at(Point::from_coords(q));
        double v = 0.0;
        for (std::size_t nu = 0; nu < 4; ++nu) v += g[mu][nu] * fns[nu](q);
        return v;
      };
    }
    const auto d = closedness_defect(xi, p);
    for (std::size_t k = 0; k < kTwoFormPairs.size(); ++k) {
      const auto [mu, nu] = kTwoFormPairs[k];
      const double want = oracle::fd_grad(flat[nu], p.coords(), mu) - oracle::fd_grad(flat[mu], p.coords(), nu);
      CHECK(d[k] == doctest::Approx(want).epsilon(1e-6));
    }
  }
}

TEST_CASE("soliton fields are not gradients") {
  const SamplingBox box;
  const auto grid = box.grid(5);
  REQUIRE(grid.size() == 625);
  std::mt19937_64 rng(29);
  auto largest_defect = [&grid](const AnalyticVectorField& xi) {
    double m = 0.0;
    for (const Point& q : grid)
      for (double d : closedness_defect(xi, q)) m = std::max(m, std::abs(d));
    return m;
  };
  for (int n = 0; n < 20; ++n) {
    auto c = random_constants(rng);
    CHECK(largest_defect(soliton_field(SolitonParams{c})) > 1e-3);
  }
  // With c1 = c2 = c3 = 0 the (s, t) mixed partials agree, but the fixed
  // -6 (x d_x + y d_y) part still breaks closedness in the (x, s) slot.
  const auto pure = soliton_field(SolitonParams{{0, 0, 0, 1.5, -2.0}});
  CHECK(std::abs(closedness_defect(pure, {0.4, 1.0, 0.3, 1.2})[5]) < 1e-12);
  CHECK(largest_defect(pure) > 1e-3);
}

TEST_CASE("scalar Laplacian") {
  const Expr s = Expr::s(), t = Expr::t(), x = Expr::x(), y = Expr::y();
  const Point p{0.3, -0.6, 0.8, 1.5};
  CHECK(std::abs(scalar_laplacian((1.0 * s + 0.0) * t, p)) < 1e-9);
  CHECK(std::abs(scalar_laplacian(Expr(3.5), p)) < 1e-12);
  CHECK(std::abs(scalar_laplacian(t, p)) < 1e-12);
  // Hand-derived: Delta f = t f_xx + (s d_x + d_y)^2 f / t + 4 t^2 (f_ss + f_tt),
  // so Delta t^2 = 8 t^2.
  CHECK(scalar_laplacian(t * t, p) == doctest::Approx(8.0 * p.t * p.t));

  // The coordinate formula above, by finite differences, on generic functions.
  std::mt19937_64 rng(30);
  const std::array<Expr, 4> fs{x * x * t, x * y * s + t * t * t, sqrt(t) * s * s, y * y / t + x * s};
  for (int n = 0; n < 10; ++n) {
    const Point q = oracle::random_point(rng);
    const auto c = q.coords();
    for (const Expr& f : fs) {
      const auto fn = oracle::as_fn(f);
      const double st = q.s, tt = q.t;
      const double lie2 = st * st * oracle::fd_hess(fn, c, 0, 0) + 2 * st * oracle::fd_hess(fn, c, 0, 1) +
                          oracle::fd_hess(fn, c, 1, 1);
      const double want = tt * oracle::fd_hess(fn, c, 0, 0) + lie2 / tt +
                          4 * tt * tt * (oracle::fd_hess(fn, c, 2, 2) + oracle::fd_hess(fn, c, 3, 3));
      CHECK(scalar_laplacian(f, q) == doctest::Approx(want).epsilon(1e-5));
    }
  }

  for (int n = 0; n < 50; ++n) {
    const auto xi = soliton_field(SolitonParams{random_constants(rng)});
    const Point q = oracle::random_point(rng);
    for (const Expr& f : xi.components) CHECK(std::abs(scalar_laplacian(f, q)) < 1e-9);
  }
  CHECK_THROWS_AS(scalar_laplacian(t, {0, 0, 0, 0}), DomainError);
}
