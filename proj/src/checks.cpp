#include "geoverify/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

#include "geoverify/harmonic.hpp"
#include "geoverify/soliton.hpp"

namespace geoverify {

// ---------------------------------------------------------------------------
// Configuration and sampling

Point SamplingBox::at(const std::array<double, kDim>& u) const {
  auto lerp = [](const std::array<double, 2>& r, double w) { return r[0] + (r[1] - r[0]) * w; };
  return Point{lerp(x, u[0]), lerp(y, u[1]), lerp(s, u[2]), lerp(t, u[3])};
}

std::vector<Point> SamplingBox::grid(int n) const {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) * n * n * n);
  for (double a : w)
    for (double b : w)
      for (double c : w)
        for (double d : w) pts.push_back(at({a, b, c, d}));
  return pts;
}

void RunConfig::validate() const {
  if (points < 1) throw ConfigError("points must be >= 1");
  if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
  const std::array<std::pair<const char*, std::array<double, 2>>, 4> ranges{
      {{"x", box.x}, {"y", box.y}, {"s", box.s}, {"t", box.t}}};
  for (const auto& [axis, r] : ranges) {
    if (!std::isfinite(r[0]) || !std::isfinite(r[1]) || r[0] > r[1]) {
      throw ConfigError(std::string("invalid box range for ") + axis);
    }
  }
  if (!(box.t[0] > 0.0)) throw ConfigError("box must satisfy t > 0");
  if (!std::isfinite(lambda)) throw ConfigError("lambda must be finite");
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::string_view check_name, std::uint64_t index) {
  const std::uint64_t name_hash = fnv1a(check_name);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(name_hash), static_cast<std::uint32_t>(name_hash >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

double CounterRng::uniform(double lo, double hi) {
  // 53 random mantissa bits; the standard distributions are not
  // reproducible across library implementations.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

// ---------------------------------------------------------------------------
// Reference tables

const Tensor3& reference_frame_connection() {
  static const Tensor3 table = [] {
    Tensor3 g{};
    // nabla_{e_i} e_j = sum_k g[i][j][k] e_k; nabla_{e_4} vanishes.
    g[0][0][3] = 1.0;   // nabla_e1 e1 = e4
    g[0][1][2] = 1.0;   // nabla_e1 e2 = e3
    g[0][2][1] = -1.0;  // nabla_e1 e3 = -e2
    g[0][3][0] = -1.0;  // nabla_e1 e4 = -e1
    g[1][0][2] = 1.0;   // nabla_e2 e1 = e3
    g[1][1][3] = -1.0;  // nabla_e2 e2 = -e4
    g[1][2][0] = -1.0;  // nabla_e2 e3 = -e1
    g[1][3][1] = 1.0;   // nabla_e2 e4 = e2
    g[2][0][1] = -1.0;  // nabla_e3 e1 = -e2
    g[2][1][0] = 1.0;   // nabla_e3 e2 = e1
    g[2][2][3] = 2.0;   // nabla_e3 e3 = 2 e4
    g[2][3][2] = -2.0;  // nabla_e3 e4 = -2 e3
    return g;
  }();
  return table;
}

const std::vector<RiemannEntry>& reference_riemann_entries() {
  static const std::vector<RiemannEntry> entries{
      {{0, 1, 0, 1}, -2.0}, {{1, 3, 1, 3}, 1.0},  {{2, 3, 0, 1}, -2.0},
      {{0, 2, 0, 2}, 1.0},  {{2, 3, 2, 3}, 4.0},  {{0, 2, 1, 3}, -1.0},
      {{0, 3, 0, 3}, 1.0},  {{1, 2, 0, 3}, 1.0},  {{0, 3, 1, 2}, 1.0},
      {{1, 2, 1, 2}, 1.0},  {{1, 3, 0, 2}, -1.0}, {{0, 1, 2, 3}, -2.0},
  };
  return entries;
}

const Tensor4& reference_riemann() {
  static const Tensor4 table = [] {
    Tensor4 r{};
    Tensor4 set{};
    for (const auto& [idx, value] : reference_riemann_entries()) {
      const auto [i, j, k, l] = idx;
      const std::array<std::pair<std::array<std::size_t, 4>, double>, 8> orbit{{
          {{i, j, k, l}, value},  {{j, i, k, l}, -value}, {{i, j, l, k}, -value},
          {{j, i, l, k}, value},  {{k, l, i, j}, value},  {{l, k, i, j}, -value},
          {{k, l, j, i}, -value}, {{l, k, j, i}, value},
      }};
      for (const auto& [o, v] : orbit) {
        double& slot = r[o[0]][o[1]][o[2]][o[3]];
        double& seen = set[o[0]][o[1]][o[2]][o[3]];
        if (seen != 0.0 && slot != v) throw std::logic_error("inconsistent curvature reference");
        slot = v;
        seen = 1.0;
      }
    }
    return r;
  }();
  return table;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

struct Sample {
  double residual = 0.0;
  Point point;
};

using PointResidual = std::function<double(const Point&, CounterRng&)>;

// Evaluates `residual` at cfg.points sampled points and keeps the maximum.
// Each point's rng stream continues after the four coordinates were drawn.
Sample sweep(const std::string& name, const RunConfig& cfg, const PointResidual& residual) {
  Sample worst{-1.0, {}};
  for (int i = 0; i < cfg.points; ++i) {
    CounterRng rng(cfg.seed, name, static_cast<std::uint64_t>(i));
    std::array<double, kDim> u{};
    for (double& v : u) v = rng.uniform(0.0, 1.0);
    const Point p = cfg.box.at(u);
    double r = residual(p, rng);
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    if (r > worst.residual) worst = {r, p};
  }
  return worst;
}

std::array<double, 5> draw_constants(CounterRng& rng) {
  std::array<double, 5> c{};
  for (double& v : c) v = rng.uniform(-3.0, 3.0);
  return c;
}

double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) m = std::max(m, std::abs(a[i][j][k] - b[i][j][k]));
  return m;
}

Sample check_lemma1(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [](const Point& p, CounterRng&) {
    return max_abs_diff(frame_connection(p).gamma, reference_frame_connection());
  });
}

Sample check_lemma2(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [](const Point& p, CounterRng&) {
    const RicciMatrix ric = ricci_frame(p);
    double m = 0.0;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) {
        const double expected = (i == j && i >= 2) ? -6.0 : 0.0;
        m = std::max(m, std::abs(ric[i][j] - expected));
      }
    const double scal = ric[0][0] + ric[1][1] + ric[2][2] + ric[3][3];
    return std::max(m, std::abs(scal + 12.0));
  });
}

Sample check_riemc(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [](const Point& p, CounterRng&) {
    const RiemannTable r = riemann_frame(p);
    const Tensor4& ref = reference_riemann();
    double m = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) m = std::max(m, max_abs_diff(r.r[i], ref[i]));
    return m;
  });
}

Sample check_theorem1(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [&cfg](const Point& p, CounterRng& rng) {
    SolitonParams params;
    params.c = cfg.soliton_constants.value_or(draw_constants(rng));
    return max_abs(soliton_residual(soliton_field(params), cfg.lambda, p));
  });
}

Sample check_nongradient(const std::string& name, const RunConfig& cfg) {
  const std::vector<Point> grid = cfg.box.grid(5);
  const AnalyticVectorField c3_field = soliton_field(SolitonParams{{0.0, 0.0, 1.0, 0.0, 0.0}});
  return sweep(name, cfg, [&](const Point& p, CounterRng& rng) {
    // Closed form of the (s, t) component for c = (0, 0, 1, 0, 0).
    const double st = closedness_defect(c3_field, p)[5];
    double residual = std::abs(st - 0.5 / (p.t * p.t * p.t));

    // Obstruction: some component of d(xi-flat) must exceed 1e-3 on the grid.
    std::array<double, 5> c{};
    if (cfg.soliton_constants) {
      c = *cfg.soliton_constants;
    } else {
      do {
        c = draw_constants(rng);
      } while (std::hypot(c[0], c[1], c[2]) < 0.1);
    }
    const AnalyticVectorField xi = soliton_field(SolitonParams{c});
    double largest = 0.0;
    for (const Point& q : grid) {
      for (double d : closedness_defect(xi, q)) largest = std::max(largest, std::abs(d));
      if (largest > 1e-3) break;
    }
    if (!(largest > 1e-3)) residual = std::max(residual, 1.0);
    return residual;
  });
}

Sample check_harmonic_components(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [&cfg](const Point& p, CounterRng& rng) {
    SolitonParams params;
    params.c = cfg.soliton_constants.value_or(draw_constants(rng));
    const AnalyticVectorField xi = soliton_field(params);
    double m = 0.0;
    for (const Expr& f : xi.components) m = std::max(m, std::abs(scalar_laplacian(f, p)));
    return m;
  });
}

// The harmonic-section system in component form, with partial derivatives in s, t.
std::array<double, 4> section_system(const Array4<Jet2>& x, double t) {
  auto ds = [&](std::size_t j) { return x[j].grad(2); };
  auto lap = [&](std::size_t j) { return x[j].hess(2, 2) + x[j].hess(3, 3); };
  auto v = [&](std::size_t j) { return x[j].value(); };
  const double t2 = t * t;
  return {4.0 * t2 * lap(0) + 4.0 * t * ds(1) - 3.0 * v(0),
          4.0 * t2 * lap(1) - 4.0 * t * ds(0) - 3.0 * v(1),
          2.0 * t2 * lap(2) - 4.0 * t * ds(3) - 3.0 * v(2),
          2.0 * t2 * lap(3) + 4.0 * t * ds(2) - 3.0 * v(3)};
}

AnalyticVectorField random_st_polynomial_field(CounterRng& rng) {
  const Expr s = Expr::s();
  const Expr t = Expr::t();
  const std::array<Expr, 6> monomials{1.0, s, t, s * s, s * t, t * t};
  std::array<Expr, kDim> comps{};
  for (Expr& c : comps) {
    Expr sum = 0.0;
    for (const Expr& m : monomials) sum = sum + rng.uniform(-1.0, 1.0) * m;
    c = sum;
  }
  return AnalyticVectorField::frame(comps);
}

Sample check_theorem3(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [](const Point& p, CounterRng& rng) {
    const AnalyticVectorField X = random_st_polynomial_field(rng);
    const FrameVector intrinsic = harmonic_section_residual(X, p);
    const auto expanded = section_system(frame_components(X, p), p.t);
    constexpr std::array<double, 4> factor{1.0, 1.0, 2.0, 2.0};
    double m = 0.0;
    for (std::size_t j = 0; j < kDim; ++j) {
      m = std::max(m, std::abs(intrinsic.comp[j] - factor[j] * expanded[j]));
    }
    return m;
  });
}

Sample check_corollary(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [](const Point& p, CounterRng& rng) {
    double m = 0.0;
    for (int k = 1; k <= 4; ++k) {
      CorollaryFamily fam{k, rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
      m = std::max(m, max_abs(harmonic_section_residual(corollary_field(fam), p)));
    }
    return m;
  });
}

std::vector<AnalyticVectorField> harmonic_map_witnesses() {
  std::vector<AnalyticVectorField> w;
  for (std::size_t i = 0; i < kDim; ++i) {
    std::array<Expr, kDim> c{};
    c[i] = 1.0;
    w.push_back(AnalyticVectorField::frame(c));
  }
  for (int k = 1; k <= 4; ++k) {
    for (const auto& [c1, c2] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}, std::pair{-0.7, 1.3}}) {
      w.push_back(corollary_field(CorollaryFamily{k, c1, c2}));
    }
  }
  return w;
}

Sample check_harmonic_map_witnesses(const std::string& name, const RunConfig& cfg) {
  const std::vector<AnalyticVectorField> witnesses = harmonic_map_witnesses();
  std::vector<double> largest(witnesses.size(), 0.0);
  const AnalyticVectorField zero = AnalyticVectorField::zero();

  Sample worst = sweep(name, cfg, [&](const Point& p, CounterRng& rng) {
    std::array<double, kDim> v{};
    for (double& c : v) c = rng.uniform(-2.0, 2.0);
    const AnalyticVectorField constant =
        AnalyticVectorField::frame({v[0], v[1], v[2], v[3]});
    const double expected = 2.0 * v[0] * v[0] + 2.0 * v[1] * v[1] + 8.0 * v[2] * v[2] + 8.0 * v[3] * v[3];
    double residual = std::abs(horizontal_tension(constant, p).comp[3] - expected);

    const TensionValue z = harmonic_map_residual(zero, p);
    residual = std::max({residual, max_abs(z.horizontal), max_abs(z.vertical)});

    for (std::size_t w = 0; w < witnesses.size(); ++w) {
      const TensionValue tv = harmonic_map_residual(witnesses[w], p);
      largest[w] = std::max({largest[w], max_abs(tv.horizontal), max_abs(tv.vertical)});
    }
    return residual;
  });
  // A witness that never leaves 1e-3 would be a nonzero harmonic map.
  for (double l : largest) {
    if (!(l > 1e-3)) worst.residual = std::max(worst.residual, 1.0);
  }
  return worst;
}

Sample check_coercivity(const std::string& name, const RunConfig& cfg) {
  return sweep(name, cfg, [&cfg](const Point& p, CounterRng& rng) {
    FrameVector v;
    for (double& c : v.comp) c = rng.uniform(-2.0, 2.0);
    const double value = coercivity_check(p, v, cfg.lambda);
    const double expected = 6.0 * (v.comp[0] * v.comp[0] + v.comp[1] * v.comp[1]);
    return std::abs(value - expected);
  });
}

using CheckFn = Sample (*)(const std::string&, const RunConfig&);

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks{
      {"coercivity", &check_coercivity},
      {"corollary", &check_corollary},
      {"harmonic-components", &check_harmonic_components},
      {"harmonic-map-witnesses", &check_harmonic_map_witnesses},
      {"lemma1", &check_lemma1},
      {"lemma2", &check_lemma2},
      {"nongradient", &check_nongradient},
      {"riemc", &check_riemc},
      {"theorem1", &check_theorem1},
      {"theorem3", &check_theorem3},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

CheckReport run_suite(const std::string& name, const RunConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UnknownCheck(name);
  cfg.validate();

  const auto start = std::chrono::steady_clock::now();
  const Sample worst = it->second(name, cfg);
  const auto stop = std::chrono::steady_clock::now();

  CheckReport report;
  report.check_name = name;
  report.points_sampled = cfg.points;
  report.max_residual = worst.residual;
  report.threshold = cfg.tol;
  report.pass = worst.residual < cfg.tol;
  report.witness_point = worst.point;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

std::vector<CheckReport> run_all(const RunConfig& cfg) {
  cfg.validate();
  std::vector<std::future<CheckReport>> pending;
  for (const std::string& name : check_names()) {
    pending.push_back(std::async(std::launch::async, [name, &cfg] { return run_suite(name, cfg); }));
  }
  std::vector<CheckReport> reports;
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

std::string to_json_line(const CheckReport& r) {
  const nlohmann::json j{
      {"check_name", r.check_name},
      {"points_sampled", r.points_sampled},
      {"max_residual", r.max_residual},
      {"threshold", r.threshold},
      {"pass", r.pass},
      {"witness_point", {{"x", r.witness_point.x}, {"y", r.witness_point.y},
                         {"s", r.witness_point.s}, {"t", r.witness_point.t}}},
      {"elapsed_ms", r.elapsed_ms},
  };
  return j.dump() + "\n";
}

std::string to_json_line_without_timing(CheckReport report) {
  report.elapsed_ms = 0.0;
  return to_json_line(report);
}

std::string summary_line(const CheckReport& r) {
  std::ostringstream os;
  os.precision(3);
  os << (r.pass ? "PASS " : "FAIL ") << r.check_name << "  points=" << r.points_sampled
     << "  max_residual=" << std::scientific << r.max_residual << "  threshold=" << r.threshold
     << std::defaultfloat << "  (" << r.elapsed_ms << " ms)";
  if (!r.pass) {
    os.precision(17);
    os << "  witness=(" << r.witness_point.x << ", " << r.witness_point.y << ", "
       << r.witness_point.s << ", " << r.witness_point.t << ")";
  }
  return os.str();
}

}  // namespace geoverify
