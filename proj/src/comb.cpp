#include "rotor/comb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rotor {

namespace {

// Comb slots: axis N=0, E=1, S=2, W=3; teeth Up=0, Down=1.
bool axis_marked(std::int64_t x, int slot) {
  // Exits run slot+1, slot+2, ...; W before E iff the rotor starts at E or S.
  if (x > 0) return slot == 1 || slot == 2;
  return slot == 0 || slot == 3;
}

bool tooth_marked(std::int64_t y, int slot) { return y > 0 ? slot == 0 : slot == 1; }

}  // namespace

ZigzagMarks extract_marks(const GraphModel& comb, const ConfigProvider& config, std::int64_t window,
                          std::size_t requested, std::int64_t tooth_window) {
  if (comb.kind() != GraphKind::Comb) throw GraphError("extract_marks needs the comb");
  if (window < 1) throw std::invalid_argument("extract_marks: window must be >= 1");
  ZigzagMarks marks;
  for (std::int64_t x = 1; x <= window; ++x) {
    if (axis_marked(x, config.initial_slot(comb, {x, 0}))) marks.positive.push_back(x);
    if (axis_marked(-x, config.initial_slot(comb, {-x, 0}))) marks.negative.push_back(-x);
  }
  for (std::int64_t x = -tooth_window; x <= tooth_window; ++x) {
    auto& tooth = marks.teeth[x];
    for (std::int64_t y = 1; y <= window; ++y) {
      if (tooth_marked(y, config.initial_slot(comb, {x, y}))) tooth.up.push_back(y);
      if (tooth_marked(-y, config.initial_slot(comb, {x, -y}))) tooth.down.push_back(-y);
    }
  }
  marks.partial = requested > 0 && (marks.positive.size() < requested || marks.negative.size() < requested);
  return marks;
}

std::int64_t predicted_odometer_twice(std::int64_t m, std::int64_t x, std::int64_t y) {
  if (m < 0) throw std::invalid_argument("predicted_odometer: m must be >= 0");
  return std::max<std::int64_t>(0, 2 * m - std::abs(x) - std::abs(y));
}

double predicted_odometer(double m, std::int64_t x, std::int64_t y) {
  return std::max(0.0, m - static_cast<double>(std::abs(x)) / 2 - static_cast<double>(std::abs(y)) / 2);
}

std::int64_t f_norm(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("f_norm: m must be >= 0");
  // deg 4 on the axis, 2 on teeth: ||f|| = sum_axis 2*(2f) + sum_teeth (2f).
  std::int64_t total = 0;
  for (std::int64_t x = -2 * m; x <= 2 * m; ++x) {
    for (std::int64_t y = -2 * m; y <= 2 * m; ++y) {
      const auto f2 = predicted_odometer_twice(m, x, y);
      total += y == 0 ? 2 * f2 : f2;
    }
  }
  return total;
}

DiamondSpec::DiamondSpec(std::int64_t n_, double c_) : n(n_), c(c_) {
  if (n < 2) throw std::invalid_argument("DiamondSpec: n must be >= 2");
  if (!(c > 0)) throw std::invalid_argument("DiamondSpec: c must be > 0");
}

double DiamondSpec::slack() const {
  const double nd = static_cast<double>(n);
  return std::sqrt(c * nd * std::log(nd));
}

std::uint64_t DiamondSpec::steps() const {
  const auto un = static_cast<std::uint64_t>(n);
  return 16 * un * un * un / 3;
}

std::uint64_t diamond_size(double r) {
  if (r <= 0) return 0;
  const auto k = static_cast<std::uint64_t>(std::ceil(r)) - 1;
  return 2 * k * k + 2 * k + 1;
}

ShapeVerdict shape_check(std::span<const Vertex> range, std::uint64_t t, const DiamondSpec& spec, int multiplier) {
  if (t != spec.steps()) {
    throw std::invalid_argument("shape_check: t=" + std::to_string(t) + " but floor(16 n^3/3)=" +
                                std::to_string(spec.steps()) + " for n=" + std::to_string(spec.n));
  }
  const double a = spec.slack() * multiplier;
  const double inner = static_cast<double>(spec.n) - a;
  const double outer = static_cast<double>(spec.n) + a;
  std::uint64_t inside = 0;
  ShapeVerdict verdict;
  verdict.outside_ok = true;
  for (const auto& v : range) {
    const auto norm = static_cast<double>(std::abs(v.x) + std::abs(v.y));
    if (norm < inner) ++inside;
    if (!(norm < outer)) verdict.outside_ok = false;
  }
  verdict.inside_ok = inside == diamond_size(inner);
  return verdict;
}

void check_odometer_sandwich(const RotorWalk& walk, std::int64_t m, double a, SandwichTally& tally) {
  const GraphModel& g = walk.graph();
  const double lo = static_cast<double>(m) - 2 * a;
  const double hi = static_cast<double>(m) + 2 * a;
  std::uint64_t in_support = 0;
  walk.for_each_cell([&](Vertex v, const Cell& c) {
    const double u = static_cast<double>(c.departures / static_cast<std::uint64_t>(g.outdeg(v)));
    const double f_lo = predicted_odometer(lo, v.x, v.y);
    ++tally.checks;
    if (f_lo > 0) ++in_support;
    if (u < f_lo) ++tally.lower_failures;
    if (u > predicted_odometer(hi, v.x, v.y)) ++tally.upper_failures;
  });
  // Vertices never reached but predicted to have fired.
  const auto expected = diamond_size(2 * lo);
  if (expected > in_support) tally.lower_failures += expected - in_support;
}

void AxisProjection::observe(Vertex v) {
  if (v.y != 0) return;
  max_abs_x_ = std::max(max_abs_x_, std::abs(v.x));
  if (!started_) {
    started_ = true;
    last_x_ = v.x;
    return;
  }
  if (v.x == last_x_) return;
  const int d = v.x > last_x_ ? 1 : -1;
  if (direction_ == 0) first_direction_ = d;
  if (direction_ != 0 && d != direction_) turns_.push_back(last_x_);
  direction_ = d;
  last_x_ = v.x;
}

std::vector<std::int64_t> expected_turning_points(const ZigzagMarks& marks, bool first_right, std::size_t count) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (out.size() < count) {
    const auto& a = first_right ? marks.positive : marks.negative;
    const auto& b = first_right ? marks.negative : marks.positive;
    if (i >= a.size()) break;
    out.push_back(a[i]);
    if (out.size() == count || i >= b.size()) break;
    out.push_back(b[i]);
    ++i;
  }
  return out;
}

CombRun run_comb_shape(std::uint64_t seed, std::int64_t n, double c, int multiplier, bool check_sandwich) {
  const DiamondSpec spec(n, c);
  auto g = GraphModel::lattice(GraphKind::Comb);
  auto cfg = ConfigProvider::uniform(seed);
  RotorWalk walk(g, cfg, {0, 0});
  AxisProjection axis;
  axis.observe(walk.position());

  CombRun run;
  run.seed = seed;
  run.n = n;
  run.c = c;
  run.t = spec.steps();
  const double a = spec.slack();
  while (walk.time() < run.t) {
    const bool done = walk.step();
    axis.observe(walk.position());
    if (done && check_sandwich && static_cast<std::int64_t>(walk.completed_excursions()) <= n) {
      check_odometer_sandwich(walk, static_cast<std::int64_t>(walk.completed_excursions()), a, run.sandwich);
    }
  }
  const auto range = walk.range();
  run.verdict = shape_check(range, run.t, spec, multiplier);
  run.range_size = range.size();
  run.range_ratio = static_cast<double>(range.size()) / std::pow(static_cast<double>(run.t), 2.0 / 3.0);
  run.excursions = walk.completed_excursions();

  const auto& turns = axis.turning_points();
  run.turning_points = turns.size();
  const auto marks = extract_marks(g, cfg, axis.max_abs_x() + 2);
  run.zigzag_ok = expected_turning_points(marks, axis.first_direction() > 0, turns.size()) == turns;
  return run;
}

}  // namespace rotor
