#include <cmath>

#include "doctest.h"
#include "rotor/comb.hpp"

using namespace rotor;

TEST_CASE("axis marks follow the rotation future") {
  auto g = GraphModel::lattice(GraphKind::Comb);
  // x=1 starts at E (exits S, W, ...): marked. x=2 starts at N (exits E, ...): not marked.
  auto cfg = ConfigProvider::explicit_map({{Vertex{1, 0}, 1}, {Vertex{2, 0}, 0}, {Vertex{3, 0}, 2},
                                           {Vertex{4, 0}, 3}, {Vertex{-1, 0}, 0}, {Vertex{-2, 0}, 1},
                                           {Vertex{-3, 0}, 2}, {Vertex{-4, 0}, 3}});
  auto marks = extract_marks(g, cfg, 4);
  CHECK(marks.positive == std::vector<std::int64_t>{1, 3});
  CHECK(marks.negative == std::vector<std::int64_t>{-1, -4});
  CHECK_FALSE(marks.partial);
  CHECK(extract_marks(g, cfg, 4, 3).partial);
}

TEST_CASE("tooth marks") {
  auto g = GraphModel::lattice(GraphKind::Comb);
  auto cfg = ConfigProvider::explicit_map({{Vertex{0, 0}, 0}, {Vertex{0, 1}, 0}, {Vertex{0, 2}, 1},
                                           {Vertex{0, -1}, 0}, {Vertex{0, -2}, 1}, {Vertex{1, 0}, 0},
                                           {Vertex{-1, 0}, 0}});
  auto marks = extract_marks(g, cfg, 1, 0, 0);
  // window 1 on the axis, teeth scan to |y| <= 1 only
  CHECK(marks.teeth.at(0).up == std::vector<std::int64_t>{1});
  CHECK(marks.teeth.at(0).down.empty());
}

TEST_CASE("uniform marks have density one half") {
  auto g = GraphModel::lattice(GraphKind::Comb);
  auto cfg = ConfigProvider::uniform(77);
  auto marks = extract_marks(g, cfg, 50000);
  const double p = static_cast<double>(marks.positive.size() + marks.negative.size()) / 1e5;
  CHECK(std::abs(p - 0.5) < 0.005);
  for (std::size_t i = 1; i < marks.positive.size(); ++i) CHECK(marks.positive[i] > marks.positive[i - 1]);
  for (std::size_t i = 1; i < marks.negative.size(); ++i) CHECK(marks.negative[i] < marks.negative[i - 1]);
}

TEST_CASE("predicted odometer") {
  CHECK(predicted_odometer_twice(3, 0, 0) == 6);
  CHECK(predicted_odometer_twice(3, 2, 2) == 2);
  CHECK(predicted_odometer_twice(3, 6, 1) == 0);
  CHECK(predicted_odometer(3, 2, 2) == doctest::Approx(1.0));
  CHECK(predicted_odometer(2.5, 1, 0) == doctest::Approx(2.0));
}

TEST_CASE("f_norm") {
  CHECK(f_norm(0) == 0);
  CHECK(f_norm(1) == 10);
  // Direct weighted summation in floating point as a second computation.
  for (std::int64_t m : {2, 5, 9}) {
    double direct = 0;
    for (std::int64_t x = -3 * m; x <= 3 * m; ++x) {
      direct += 4 * predicted_odometer(static_cast<double>(m), x, 0);
      for (std::int64_t y = 1; y <= 3 * m; ++y) direct += 2 * 2 * predicted_odometer(static_cast<double>(m), x, y);
    }
    CHECK(static_cast<double>(f_norm(m)) == doctest::Approx(direct));
  }
  CHECK(std::abs(static_cast<double>(f_norm(200)) / 8e6 - 16.0 / 3.0) < 0.1);
}

TEST_CASE("shape_check") {
  const DiamondSpec spec(20, 4.0);
  std::vector<Vertex> d_n, d_2n;
  for (int x = -40; x <= 40; ++x) {
    for (int y = -40; y <= 40; ++y) {
      if (std::abs(x) + std::abs(y) < 20) d_n.push_back({x, y});
      if (std::abs(x) + std::abs(y) < 40) d_2n.push_back({x, y});
    }
  }
  auto v = shape_check(d_n, spec.steps(), spec, 6);
  CHECK(v.inside_ok);
  CHECK(v.outside_ok);
  // Tight multiplier so the enlarged diamond is detected.
  const DiamondSpec big(400, 0.01);
  std::vector<Vertex> ring;
  for (int x = -800; x <= 800; x += 7) ring.push_back({x, 800 - std::abs(x)});
  CHECK_FALSE(shape_check(ring, big.steps(), big, 6).outside_ok);
  CHECK_FALSE(shape_check(d_2n, spec.steps(), spec, 0).outside_ok);
  CHECK_FALSE(shape_check(std::vector<Vertex>{{0, 0}}, spec.steps(), spec, 0).inside_ok);
  CHECK_THROWS_AS(shape_check(d_n, spec.steps() + 1, spec, 6), std::invalid_argument);
  CHECK_THROWS_AS(DiamondSpec(1, 4.0), std::invalid_argument);
  CHECK(diamond_size(0) == 0);
  CHECK(diamond_size(1) == 1);
  CHECK(diamond_size(1.5) == 5);
  CHECK(diamond_size(2) == 5);
}

TEST_CASE("axis projection turning points match the zigzag marks") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto run = run_comb_shape(seed, 12, 4.0, 6);
    CHECK(run.zigzag_ok);
    CHECK(run.turning_points > 2);
    CHECK(run.t == 9216);
  }
}

TEST_CASE("hand-built zigzag") {
  AxisProjection p;
  for (int x : {0, 1, 2, 2, 1, 0, -1, 0, 1, 2, 3}) p.observe({x, 0});
  p.observe({3, 5});
  CHECK(p.turning_points() == std::vector<std::int64_t>{2, -1});
  CHECK(p.first_direction() == 1);
  ZigzagMarks m;
  m.positive = {2, 5};
  m.negative = {-1, -3};
  CHECK(expected_turning_points(m, true, 3) == std::vector<std::int64_t>{2, -1, 5});
  CHECK(expected_turning_points(m, false, 4) == std::vector<std::int64_t>{-1, 2, -3, 5});
}
