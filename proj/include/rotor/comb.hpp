#pragma once

// Comb-specific analysis: zigzag marks, the predicted odometer f_m and the
// diamond shape check for ranges of uniform rotor walks on the comb.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rotor/config.hpp"
#include "rotor/graph.hpp"
#include "rotor/walk.hpp"

namespace rotor {

struct ToothMarks {
  std::vector<std::int64_t> up;    // y > 0 with Down before Up, ascending
  std::vector<std::int64_t> down;  // y < 0 with Up before Down, descending
};

struct ZigzagMarks {
  std::vector<std::int64_t> positive;  // x_1 < x_2 < ... on the positive axis
  std::vector<std::int64_t> negative;  // x_{-1} > x_{-2} > ... on the negative axis
  std::map<std::int64_t, ToothMarks> teeth;
  bool partial = false;  // fewer marks than requested inside the window
};

/// Scans |x| <= window on the axis (and |y| <= window on teeth |x| <= tooth_window).
/// `requested` marks are wanted per axis side; partial is set when the window
/// ran out first.
ZigzagMarks extract_marks(const GraphModel& comb, const ConfigProvider& config, std::int64_t window,
                          std::size_t requested = 0, std::int64_t tooth_window = -1);

/// 2 * f_m(x, y) = (2m - |x| - |y|)^+, exact.
std::int64_t predicted_odometer_twice(std::int64_t m, std::int64_t x, std::int64_t y);
/// f_m(x, y) for real m.
double predicted_odometer(double m, std::int64_t x, std::int64_t y);

/// ||f_m|| = sum_z deg(z) f_m(z), exact (always an integer).
std::int64_t f_norm(std::int64_t m);

struct DiamondSpec {
  std::int64_t n = 2;
  double c = 4.0;

  DiamondSpec(std::int64_t n_, double c_);
  double slack() const;  // a = sqrt(c n log n)
  std::uint64_t steps() const;  // floor(16 n^3 / 3)
};

struct ShapeVerdict {
  bool inside_ok = false;
  bool outside_ok = false;
  bool both() const noexcept { return inside_ok && outside_ok; }
};

/// D_r = {|x| + |y| < r}. `range` need not be sorted; t must equal spec.steps().
ShapeVerdict shape_check(std::span<const Vertex> range, std::uint64_t t, const DiamondSpec& spec, int multiplier);

/// Number of lattice points with |x| + |y| < r.
std::uint64_t diamond_size(double r);

struct SandwichTally {
  std::uint64_t checks = 0;
  std::uint64_t lower_failures = 0;
  std::uint64_t upper_failures = 0;
};

/// f_{m-2a} <= u_m <= f_{m+2a} where u_m = floor(departures / deg) after m excursions.
void check_odometer_sandwich(const RotorWalk& walk, std::int64_t m, double a, SandwichTally& tally);

/// Tracks turning points of the walk's projection onto the axis.
class AxisProjection {
 public:
  void observe(Vertex v);
  const std::vector<std::int64_t>& turning_points() const noexcept { return turns_; }
  int first_direction() const noexcept { return first_direction_; }  // +1 right, -1 left, 0 none yet
  std::int64_t max_abs_x() const noexcept { return max_abs_x_; }

 private:
  bool started_ = false;
  std::int64_t last_x_ = 0;
  int direction_ = 0;
  int first_direction_ = 0;
  std::int64_t max_abs_x_ = 0;
  std::vector<std::int64_t> turns_;
};

/// Expected turning sequence x_1, x_{-1}, x_2, ... (or starting with x_{-1}).
std::vector<std::int64_t> expected_turning_points(const ZigzagMarks& marks, bool first_right, std::size_t count);

struct CombRun {
  std::uint64_t seed = 0;
  std::int64_t n = 0;
  double c = 0;
  std::uint64_t t = 0;
  ShapeVerdict verdict;
  std::uint64_t range_size = 0;
  double range_ratio = 0;  // #R_t / t^(2/3)
  bool zigzag_ok = false;
  std::uint64_t turning_points = 0;
  SandwichTally sandwich;
  std::uint64_t excursions = 0;
};

/// Uniform rotor walk on the comb for floor(16 n^3/3) steps from the origin.
CombRun run_comb_shape(std::uint64_t seed, std::int64_t n, double c, int multiplier, bool check_sandwich = true);

}  // namespace rotor
