#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "rotor/ball.hpp"
#include "rotor/generators.hpp"
#include "rotor/invariants.hpp"
#include "rotor/walk.hpp"

using namespace rotor;

TEST_CASE("first step on Z2 from the all-North configuration") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto cfg = ConfigProvider::explicit_map({{Vertex{0, 0}, 0}, {Vertex{1, 0}, 0}});
  RotorWalk walk(g, cfg, {0, 0});
  CHECK(walk.time() == 0);
  CHECK(walk.range_size() == 0);
  CHECK_FALSE(walk.rotor({0, 0}).has_value());
  walk.step();
  CHECK(walk.position() == Vertex{1, 0});
  CHECK(walk.rotor({0, 0}) == 1);  // now points East
  CHECK(walk.range_size() == 1);
  CHECK(walk.departures({0, 0}) == 1);
}

TEST_CASE("two-vertex graph: T(1) = 2 and each vertex fires once") {
  auto g = build_path(2);
  auto log = run_excursions(g, ConfigProvider::uniform(1), finite_vertex(0), 3, 100);
  REQUIRE(log.excursions.size() == 3);
  CHECK(log.excursions[0].end_time == 2);
  CHECK(log.excursions[1].end_time == 4);
  const std::vector<std::pair<Vertex, std::uint64_t>> e1{{finite_vertex(0), 1}, {finite_vertex(1), 1}};
  CHECK(log.excursions[0].visits == e1);
}

TEST_CASE("trace against an independent simulator") {
  // Z2 with the all-North initial rotors: from o the walk goes E, then at (1,0) E again...
  auto g = GraphModel::lattice(GraphKind::Z2);
  std::unordered_map<Vertex, int, VertexHash> north;
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) north[{x, y}] = 0;
  auto cfg = ConfigProvider::explicit_map(north);
  const auto expected = oracle::rotor_trajectory(g, {0, 0}, 4, [](Vertex) { return 0; });
  CHECK(expected == std::vector<Vertex>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
  RotorWalk walk(g, cfg, {0, 0});
  for (std::size_t i = 1; i < expected.size(); ++i) {
    walk.step();
    CHECK(walk.position() == expected[i]);
  }

  // Longer randomised comparisons on every lattice.
  for (auto kind : {GraphKind::Z2, GraphKind::Line, GraphKind::Comb, GraphKind::Manhattan, GraphKind::FLattice}) {
    auto lat = GraphModel::lattice(kind);
    auto ucfg = ConfigProvider::uniform(7);
    const auto path = oracle::rotor_trajectory(lat, {0, 0}, 20000, [&](Vertex v) { return ucfg.initial_slot(lat, v); });
    RotorWalk w(lat, ucfg, {0, 0});
    bool same = true;
    for (std::size_t i = 1; i < path.size(); ++i) {
      w.step();
      same = same && w.position() == path[i];
    }
    CHECK_MESSAGE(same, to_string(kind));
  }
}

TEST_CASE("triangle: e_1 <= 2 everywhere") {
  auto g = build_cycle(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto log = run_excursions(g, ConfigProvider::uniform(seed), finite_vertex(0), 1, 100);
    REQUIRE(log.excursions.size() == 1);
    for (const auto& [v, c] : log.excursions[0].visits) CHECK(c <= 2);
  }
}

TEST_CASE("departure odometer sums to t; range empty at t = 0") {
  auto g = GraphModel::lattice(GraphKind::Comb);
  RotorWalk walk(g, ConfigProvider::uniform(3), {0, 0});
  CHECK(walk.range().empty());
  for (int i = 0; i < 5000; ++i) walk.step();
  std::uint64_t total = 0, arrivals = 0;
  walk.for_each_cell([&](Vertex, const Cell& c) {
    total += c.departures;
    arrivals += c.arrivals;
  });
  CHECK(total == 5000);
  CHECK(arrivals == 5000);
  CHECK(walk.range().size() == walk.range_size());
}

TEST_CASE("determinism") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  auto cfg = ConfigProvider::uniform(11);
  const std::uint64_t marks[] = {100, 1000};
  auto a = run_steps(g, cfg, {0, 0}, 50000, marks, true);
  auto b = run_steps(g, cfg, {0, 0}, 50000, marks, true);
  REQUIRE(a.checkpoints.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.checkpoints[i].range == b.checkpoints[i].range);
    CHECK(a.checkpoints[i].origin_returns == b.checkpoints[i].origin_returns);
  }
  CHECK(a.checkpoints[2].time == 50000);
}

TEST_CASE("world limit aborts cleanly") {
  auto g = GraphModel::lattice(GraphKind::Line, 5);
  auto cfg = path_to_origin_config(g, {0, 0}, 1);
  RotorWalk walk(g, cfg, {0, 0});
  bool aborted = false;
  try {
    for (int i = 0; i < 1000; ++i) walk.step();
  } catch (const WalkAborted& e) {
    aborted = true;
    CHECK(std::abs(e.position().x) == 5);
  }
  CHECK(aborted);
  CHECK_THROWS_AS(run_excursions(g, cfg, {0, 0}, 0, 10), std::invalid_argument);
}

TEST_CASE("excursion invariants on random Eulerian graphs") {
  InvariantTally all;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 17);
    auto g = seed % 2 == 0 ? random_bidirected(n, static_cast<int>(seed % 7), seed)
                           : random_directed_eulerian(n, static_cast<int>(seed % 5), 4, seed);
    const Vertex o = finite_vertex(static_cast<std::int64_t>(seed % static_cast<std::uint64_t>(n)));
    ExcursionMonitor monitor(g, o);
    auto log = run_excursions(
        g, ConfigProvider::uniform(seed * 31 + 1), o, 40, 10'000'000,
        [&](const RotorWalk& w, const ExcursionRecord& rec) { monitor.on_excursion(w, rec); }, false);
    CHECK_FALSE(log.incomplete);
    all.merge(monitor.tally());

    // Pathwise agreement with the independent simulator.
    auto cfg = ConfigProvider::uniform(seed);
    const auto path = oracle::rotor_trajectory(g, o, 500, [&](Vertex v) { return cfg.initial_slot(g, v); });
    RotorWalk w(g, cfg, o);
    bool same = true;
    for (std::size_t i = 1; i < path.size(); ++i) {
      w.step();
      same = same && w.position() == path[i];
    }
    CHECK(same);
  }
  CHECK(all.checks > 10000);
  CHECK_MESSAGE(all.ok(), (all.messages.empty() ? std::string() : all.messages.front()));
}

TEST_CASE("excursion invariants on lattices") {
  for (auto kind : {GraphKind::Z2, GraphKind::Comb, GraphKind::Manhattan, GraphKind::FLattice, GraphKind::Line}) {
    auto g = GraphModel::lattice(kind);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      ExcursionMonitor monitor(g, {0, 0});
      run_excursions(
          g, ConfigProvider::uniform(seed), {0, 0}, 25, 5'000'000,
          [&](const RotorWalk& w, const ExcursionRecord& rec) { monitor.on_excursion(w, rec); }, false);
      CHECK_MESSAGE(monitor.tally().ok(), to_string(kind));
    }
  }
}

TEST_CASE("range lower bounds along the walk") {
  for (auto kind : {GraphKind::Z2, GraphKind::Comb, GraphKind::Line}) {
    auto g = GraphModel::lattice(kind);
    BallGrowth balls(g, {0, 0});
    InvariantTally tally;
    RotorWalk walk(g, ConfigProvider::uniform(5), {0, 0});
    for (int i = 0; i < 20000; ++i) {
      walk.step();
      check_range_bounds(walk, balls, tally, i % 97 == 0);
    }
    CHECK_MESSAGE(tally.ok(), to_string(kind));
  }
}

TEST_CASE("pointwise bounds need deg(x) <= deg(o): star counterexample") {
  // Walk from a leaf of a 6-star. Every excursion passes the centre once per leaf, so
  // visits(centre) ~ 6 returns(o), and #R_t <= 7 while t/(deg(o)W^-1(t)+Delta-1) -> 12.
  auto g = build_star(6);
  BallGrowth balls(g, finite_vertex(1));
  CHECK(balls.cumulative(1) == 2);
  CHECK(balls.cumulative(3) == 2 + 12 + 12);
  InvariantTally tally;
  RotorWalk walk(g, ConfigProvider::uniform(1), finite_vertex(1));
  for (int i = 0; i < 2000; ++i) walk.step();
  check_range_bounds(walk, balls, tally, true);
  CHECK(walk.origin_returns() < static_cast<std::uint64_t>(balls.w_inverse(2000)));  // (i) still holds
  CHECK(tally.failures == 2);                                                          // (ii) and (iii) do not
  CHECK(walk.range_size() == 7);
}
