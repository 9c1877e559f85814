#include <array>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "rotor/ball.hpp"
#include "rotor/config.hpp"
#include "rotor/walk.hpp"

using namespace rotor;

TEST_CASE("uniform configuration is a pure function of (seed, vertex)") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto a = ConfigProvider::uniform(17);
  auto b = ConfigProvider::uniform(17);
  auto c = ConfigProvider::uniform(18);
  int differ = 0;
  for (int x = -20; x <= 20; ++x) {
    for (int y = -20; y <= 20; ++y) {
      const int sa = a.initial_slot(g, {x, y});
      CHECK(sa == b.initial_slot(g, {x, y}));
      CHECK(sa == a.initial_slot(g, {x, y}));
      CHECK(sa >= 0);
      CHECK(sa < 4);
      differ += sa != c.initial_slot(g, {x, y});
    }
  }
  CHECK(differ > 1000);
}

TEST_CASE("uniform configuration frequencies") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto cfg = ConfigProvider::uniform(2024);
  std::array<long, 4> counts{};
  for (int x = 0; x < 1000; ++x) {
    for (int y = 0; y < 1000; ++y) ++counts[static_cast<std::size_t>(cfg.initial_slot(g, {x - 500, y - 500}))];
  }
  for (long n : counts) CHECK(std::abs(static_cast<double>(n) / 1e6 - 0.25) < 0.002);

  // Two-slot lattices split evenly too.
  auto comb = GraphModel::lattice(GraphKind::Comb);
  long up = 0;
  for (int x = 0; x < 1000; ++x) {
    for (int y = 1; y <= 100; ++y) up += cfg.initial_slot(comb, {x, y}) == 0;
  }
  CHECK(std::abs(static_cast<double>(up) / 1e5 - 0.5) < 0.01);
}

TEST_CASE("uniform configuration: adjacent pairs are independent (chi-square)") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto cfg = ConfigProvider::uniform(99);
  for (int dir = 0; dir < 2; ++dir) {
    std::array<double, 16> counts{};
    double total = 0;
    for (int x = 0; x < 400; x += 2) {
      for (int y = 0; y < 500; ++y) {
        const Vertex v{x, y};
        const Vertex w = dir == 0 ? Vertex{x + 1, y} : Vertex{y, x + 1};
        const Vertex v2 = dir == 0 ? v : Vertex{y, x};
        ++counts[static_cast<std::size_t>(cfg.initial_slot(g, v2) * 4 + cfg.initial_slot(g, w))];
        ++total;
      }
    }
    double chi2 = 0;
    for (double n : counts) chi2 += (n - total / 16) * (n - total / 16) / (total / 16);
    CHECK(chi2 < 37.7);  // 15 degrees of freedom, p = 0.001
  }
}

TEST_CASE("diamond configuration arrows in a 7x7 window") {
  // Rows y = 3 .. -3, columns x = -3 .. 3.
  const char* rows[] = {"NNNEEEE", "NNNEEEE", "NNNEEEE", "NNNNSSS", "WWWWSSS", "WWWWSSS", "WWWWSSS"};
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto cfg = diamond_config_z2();
  const std::string letters = "NESW";
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 7; ++c) {
      const Vertex v{c - 3, 3 - r};
      CHECK_MESSAGE(letters[static_cast<std::size_t>(cfg.initial_slot(g, v))] == rows[r][c], v);
    }
  }
  // Shifted origin.
  auto shifted = diamond_config_z2({10, -4});
  for (int x = -5; x <= 5; ++x) {
    for (int y = -5; y <= 5; ++y) CHECK(shifted.initial_slot(g, {x + 10, y - 4}) == cfg.initial_slot(g, {x, y}));
  }
}

TEST_CASE("diamond configuration gives A_n = B(o,n), T(n) = W(n) and balls as ranges") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto cfg = diamond_config_z2();
  BallGrowth balls(g, {0, 0});
  RotorWalk walk(g, cfg, {0, 0});
  std::uint64_t n = 0;
  while (n < 30) {
    if (!walk.step()) continue;
    ++n;
    const auto rec = walk.last_excursion();
    const auto b = balls.ball(static_cast<int>(n));
    std::vector<Vertex> support;
    for (const auto& [v, c] : rec.visits) support.push_back(v);
    std::sort(support.begin(), support.end());
    auto sorted_ball = b;
    std::sort(sorted_ball.begin(), sorted_ball.end());
    CHECK(support == sorted_ball);
    for (const auto& [v, c] : rec.visits) {
      const bool interior = balls.in_ball(v, static_cast<int>(n) - 1);
      CHECK(c == (interior ? 4u : c));
      CHECK(c >= 1);
    }
    if (n <= 20) CHECK(rec.end_time == balls.cumulative(static_cast<int>(n)));
    CHECK(walk.range_size() == static_cast<std::uint64_t>(2 * n * n + 2 * n + 1));
  }
}

TEST_CASE("path-to-origin configuration keeps the walk away from the origin") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto cfg = path_to_origin_config(g, {0, 0}, 5);
  const std::uint64_t t_max = 1'000'000;
  RotorWalk walk(g, cfg, {0, 0});
  bool bound_ok = true;
  while (walk.time() < t_max) {
    walk.step();
    if (walk.range_size() * 4 < walk.time()) bound_ok = false;
  }
  CHECK(walk.origin_returns() < 4);
  CHECK(walk.completed_excursions() == 0);
  CHECK(bound_ok);

  auto log = run_excursions(g, cfg, {0, 0}, 1, 100'000);
  CHECK(log.incomplete);
  CHECK(log.excursions.empty());
}

TEST_CASE("path-to-origin on the comb and the line") {
  auto comb = GraphModel::lattice(GraphKind::Comb);
  auto cfg = path_to_origin_config(comb, {0, 0}, 1);
  auto log = run_excursions(comb, cfg, {0, 0}, 1, 200'000);
  CHECK(log.incomplete);
  CHECK_THROWS_AS(path_to_origin_config(build_cycle(5), finite_vertex(0), 1), ConfigError);
  // Manhattan: vertices on the east ray alternate row direction; (1,0) points E.
  auto manhattan = GraphModel::lattice(GraphKind::Manhattan);
  CHECK_THROWS_AS(path_to_origin_config(manhattan, {0, 0}, 1), ConfigError);
}

TEST_CASE("explicit configuration") {
  std::istringstream in("# x y slot\n0 0 2\n1 0 3\n\n-1 0 1\n");
  auto cfg = ConfigProvider::load_explicit(in);
  auto g = GraphModel::lattice(GraphKind::Z2);
  CHECK(cfg.initial_slot(g, {0, 0}) == 2);
  CHECK(cfg.initial_slot(g, {1, 0}) == 3);
  CHECK_THROWS_AS(cfg.initial_slot(g, {5, 5}), ConfigError);
  auto comb = GraphModel::lattice(GraphKind::Comb);
  auto bad = ConfigProvider::explicit_map({{Vertex{0, 3}, 2}});
  CHECK_THROWS_AS(bad.initial_slot(comb, {0, 3}), ConfigError);
  std::istringstream malformed("0 0\n");
  CHECK_THROWS_AS(ConfigProvider::load_explicit(malformed), ConfigError);
}

TEST_CASE("tree-to-origin configuration points along shortest paths") {
  auto g = build_thick_cycle(5, 2);
  auto cfg = tree_to_origin_config(g, finite_vertex(0));
  for (std::int64_t v = 1; v < 10; ++v) {
    const auto w = g.head(finite_vertex(v), cfg.initial_slot(g, finite_vertex(v)));
    BallGrowth from_w(g, w);
    BallGrowth from_v(g, finite_vertex(v));
    CHECK(from_w.distance(finite_vertex(0), 10) + 1 == from_v.distance(finite_vertex(0), 10));
  }
  CHECK_THROWS_AS(tree_to_origin_config(GraphModel::lattice(GraphKind::Z2), {0, 0}), ConfigError);
}
