#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geoverify/chart.hpp"
#include "geoverify/curvature.hpp"

namespace geoverify {

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(const std::string& name) : std::invalid_argument("unknown check: " + name) {}
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Axis-aligned sampling box in chart coordinates.
struct SamplingBox {
  std::array<double, 2> x{-2.0, 2.0};
  std::array<double, 2> y{-2.0, 2.0};
  std::array<double, 2> s{-2.0, 2.0};
  std::array<double, 2> t{0.5, 2.0};

  /// Maps a point of the unit cube into the box.
  Point at(const std::array<double, kDim>& unit) const;
  /// The n^4 tensor grid including the box corners.
  std::vector<Point> grid(int n) const;
};

struct RunConfig {
  std::uint64_t seed = 0;
  int points = 100;
  double tol = 1e-9;
  SamplingBox box;
  /// Fixed soliton constants c1..c5; random per point when absent.
  std::optional<std::array<double, 5>> soliton_constants;
  double lambda = -6.0;

  /// Throws ConfigError on points < 1, tol <= 0 or a box that is empty or
  /// leaves the chart.
  void validate() const;
};

struct CheckReport {
  std::string check_name;
  int points_sampled = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  Point witness_point;
  double elapsed_ms = 0.0;
};

/// Uniform variates keyed on (seed, check name, point index). Each key gets
/// its own stream, so adding or reordering checks never changes another
/// check's samples.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::string_view check_name, std::uint64_t index);

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// Registered check names, sorted.
const std::vector<std::string>& check_names();

/// Runs one registered check. Throws UnknownCheck or ConfigError.
CheckReport run_suite(const std::string& name, const RunConfig& cfg);

/// Runs every registered check; reports are ordered by check name.
std::vector<CheckReport> run_all(const RunConfig& cfg);

/// One JSON object per report, newline-terminated.
std::string to_json_line(const CheckReport& report);
/// to_json_line with elapsed_ms zeroed, for comparing runs.
std::string to_json_line_without_timing(CheckReport report);

/// Human-readable one-line summary; includes the witness point on failure.
std::string summary_line(const CheckReport& report);

/// Reference values for the frame connection of F^4, table[i][j][k] =
/// g(nabla_{e_i} e_j, e_k).
const Tensor3& reference_frame_connection();

/// Reference curvature g(R(e_i, e_j) e_k, e_l), filled from the twelve
/// listed components by the symmetries of the curvature tensor.
const Tensor4& reference_riemann();

/// The twelve listed curvature components, 0-based indices.
struct RiemannEntry {
  std::array<std::size_t, 4> index;
  double value;
};
const std::vector<RiemannEntry>& reference_riemann_entries();

}  // namespace geoverify
