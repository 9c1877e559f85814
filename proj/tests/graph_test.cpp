#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rotor/ball.hpp"
#include "rotor/graph.hpp"

using namespace rotor;

namespace {

std::vector<Vertex> heads(const GraphModel& g, Vertex v) {
  std::vector<Vertex> out;
  for (const auto& e : g.out_edges(v)) out.push_back(e.head);
  return out;
}

const GraphKind kLattices[] = {GraphKind::Z2, GraphKind::Line, GraphKind::Comb, GraphKind::Manhattan,
                               GraphKind::FLattice};

}  // namespace

TEST_CASE("out-edge order follows the fixed mechanisms") {
  auto z2 = GraphModel::lattice(GraphKind::Z2);
  CHECK(heads(z2, {0, 0}) == std::vector<Vertex>{{0, 1}, {1, 0}, {0, -1}, {-1, 0}});

  auto comb = GraphModel::lattice(GraphKind::Comb);
  CHECK(heads(comb, {3, 2}) == std::vector<Vertex>{{3, 3}, {3, 1}});
  CHECK(heads(comb, {3, 0}) == std::vector<Vertex>{{3, 1}, {4, 0}, {3, -1}, {2, 0}});

  auto line = GraphModel::lattice(GraphKind::Line);
  CHECK(heads(line, {5, 0}) == std::vector<Vertex>{{6, 0}, {4, 0}});
  CHECK_FALSE(line.contains({0, 1}));

  // Even row points E, even column points S.
  auto manhattan = GraphModel::lattice(GraphKind::Manhattan);
  CHECK(heads(manhattan, {0, 0}) == std::vector<Vertex>{{1, 0}, {0, -1}});
  CHECK(heads(manhattan, {1, 1}) == std::vector<Vertex>{{1, 2}, {0, 1}});   // odd column N, odd row W
  CHECK(heads(manhattan, {0, 1}) == std::vector<Vertex>{{0, 0}, {-1, 1}});  // S, W
  CHECK(heads(manhattan, {-1, -2}) == std::vector<Vertex>{{0, -2}, {-1, -1}});

  auto f = GraphModel::lattice(GraphKind::FLattice);
  CHECK(heads(f, {0, 0}) == std::vector<Vertex>{{0, 1}, {0, -1}});
  CHECK(heads(f, {1, 0}) == std::vector<Vertex>{{2, 0}, {0, 0}});
  CHECK(heads(f, {-3, 0}) == std::vector<Vertex>{{-2, 0}, {-4, 0}});
}

TEST_CASE("out-edge cardinality on every lattice") {
  for (auto kind : kLattices) {
    auto g = GraphModel::lattice(kind);
    for (int x = -7; x <= 7; ++x) {
      for (int y = -7; y <= 7; ++y) {
        const Vertex v{x, kind == GraphKind::Line ? 0 : y};
        int expected = 2;
        if (kind == GraphKind::Z2 || (kind == GraphKind::Comb && v.y == 0)) expected = 4;
        CHECK(g.outdeg(v) == expected);
        CHECK(g.indeg(v) == expected);
        for (const auto& e : g.out_edges(v)) {
          CHECK(e.head == g.head(v, e.slot));
          CHECK(g.slot_toward(v, e.head) == e.slot);
        }
      }
    }
  }
}

TEST_CASE("in-neighbour lists agree with out-edges") {
  for (auto kind : kLattices) {
    auto g = GraphModel::lattice(kind);
    std::map<Vertex, int> in_count;
    for (int x = -9; x <= 9; ++x) {
      for (int y = -9; y <= 9; ++y) {
        if (!g.contains({x, y})) continue;
        for (const auto& e : g.out_edges({x, y})) ++in_count[e.head];
      }
    }
    for (int x = -6; x <= 6; ++x) {
      for (int y = -6; y <= 6; ++y) {
        const Vertex v{x, kind == GraphKind::Line ? 0 : y};
        const auto in = g.in_neighbors(v);
        CHECK(static_cast<int>(in.size()) == in_count[v]);
        for (const auto& u : in) CHECK(g.slot_toward(u, v) >= 0);
      }
    }
  }
}

TEST_CASE("directed lattices orient each grid edge exactly once") {
  for (auto kind : {GraphKind::Manhattan, GraphKind::FLattice}) {
    auto g = GraphModel::lattice(kind);
    for (int x = -10; x < 10; ++x) {
      for (int y = -10; y < 10; ++y) {
        const Vertex v{x, y};
        const Vertex east{x + 1, y};
        const Vertex north{x, y + 1};
        const int horizontal = (g.slot_toward(v, east) >= 0) + (g.slot_toward(east, v) >= 0);
        const int vertical = (g.slot_toward(v, north) >= 0) + (g.slot_toward(north, v) >= 0);
        CHECK(horizontal == 1);
        CHECK(vertical == 1);
      }
    }
  }
}

TEST_CASE("Manhattan orientation rule: rows E/W by parity, columns S/N by parity") {
  auto g = GraphModel::lattice(GraphKind::Manhattan);
  for (int x = -10; x < 10; ++x) {
    for (int y = -10; y < 10; ++y) {
      const bool even_row = (y & 1) == 0;
      const bool even_col = (x & 1) == 0;
      CHECK(g.slot_toward({x, y}, {even_row ? x + 1 : x - 1, y}) >= 0);
      CHECK(g.slot_toward({x, y}, {x, even_col ? y - 1 : y + 1}) >= 0);
    }
  }
}

TEST_CASE("world limit guards lattice coordinates") {
  auto g = GraphModel::lattice(GraphKind::Z2, 10);
  CHECK(g.contains({10, -10}));
  CHECK_FALSE(g.contains({11, 0}));
  CHECK_THROWS_AS(g.out_edges({0, 11}), WorldLimitError);
  auto big = GraphModel::lattice(GraphKind::Z2);
  CHECK_NOTHROW(big.out_edges({kDefaultWorldLimit, 0}));
  CHECK_THROWS_AS(big.out_edges({kDefaultWorldLimit + 1, 0}), WorldLimitError);
  CHECK_THROWS_AS(GraphModel::lattice(GraphKind::Z2, 0), GraphError);
}

TEST_CASE("balls on Z2 are diamonds") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  BallGrowth growth(g, {0, 0});
  for (int r = 0; r <= 100; ++r) {
    CHECK(growth.size(r) == static_cast<std::size_t>(2 * r * r + 2 * r + 1));
  }
  CHECK(ball(g, {0, 0}, 1).vertices.size() == 5);
  CHECK(ball(g, {0, 0}, 2).vertices.size() == 13);
}

TEST_CASE("v(r) and W(r) against brute-force edge enumeration") {
  // Values frozen from the oracle: v(0)=8, v(1)=32 on Z2.
  auto g = GraphModel::lattice(GraphKind::Z2);
  CHECK(oracle::incident_edges(g, oracle::ball(g, {0, 0}, 0), 4) == 8);
  CHECK(oracle::incident_edges(g, oracle::ball(g, {0, 0}, 1), 4) == 32);
  BallGrowth growth(g, {0, 0});
  CHECK(growth.incident_edges(0) == 8);
  CHECK(growth.cumulative(1) == 8);
  CHECK(growth.incident_edges(1) == 32);
  CHECK(growth.cumulative(2) == 40);

  for (auto kind : kLattices) {
    auto lat = GraphModel::lattice(kind);
    for (Vertex o : {Vertex{0, 0}, Vertex{1, 0}, Vertex{2, 0}}) {
      BallGrowth bg(lat, o);
      for (int r = 0; r <= 6; ++r) {
        const auto b = oracle::ball(lat, o, r);
        CHECK(bg.size(r) == b.size());
        CHECK(bg.incident_edges(r) == oracle::incident_edges(lat, b, 12));
      }
    }
  }
}

TEST_CASE("comb ball") {
  auto g = GraphModel::lattice(GraphKind::Comb);
  CHECK(oracle::ball(g, {0, 0}, 2).size() == 13);
  CHECK(ball(g, {0, 0}, 2).vertices.size() == 13);
}

TEST_CASE("ball monotonicity on all lattices") {
  for (auto kind : kLattices) {
    auto g = GraphModel::lattice(kind);
    BallGrowth growth(g, {0, 0});
    auto prev = growth.ball(0);
    std::set<Vertex> prev_set(prev.begin(), prev.end());
    std::uint64_t prev_w = 0;
    for (int r = 1; r <= 30; ++r) {
      auto cur = growth.ball(r);
      std::set<Vertex> cur_set(cur.begin(), cur.end());
      CHECK(std::includes(cur_set.begin(), cur_set.end(), prev_set.begin(), prev_set.end()));
      CHECK(growth.cumulative(r) > prev_w);
      prev_w = growth.cumulative(r);
      prev_set = std::move(cur_set);
    }
  }
}

TEST_CASE("W grows like (8/3) r^3 on Z2") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  BallGrowth growth(g, {0, 0});
  const double w = static_cast<double>(growth.cumulative(100));
  CHECK(std::abs(w / 1e6 - 8.0 / 3.0) < 0.1);
  // closed form 8 * r(r+1)(2r+1)/6 from v(n) = 8(n+1)^2
  for (int r = 0; r <= 60; ++r) {
    const std::uint64_t ur = static_cast<std::uint64_t>(r);
    CHECK(growth.cumulative(r) == 8 * ur * (ur + 1) * (2 * ur + 1) / 6);
  }
}

TEST_CASE("w_inverse") {
  auto g = GraphModel::lattice(GraphKind::Z2);
  CHECK(w_inverse(g, {0, 0}, 0) == 1);
  CHECK(w_inverse(g, {0, 0}, 7) == 1);
  CHECK(w_inverse(g, {0, 0}, 8) == 2);
  CHECK(w_inverse(g, {0, 0}, 39) == 2);
  CHECK(w_inverse(g, {0, 0}, 40) == 3);

  BallGrowth growth(g, {0, 0});
  for (std::uint64_t t = 0; t < 5000; t += 7) {
    const int r = growth.w_inverse(t);
    CHECK(growth.cumulative(r) > t);
    CHECK(growth.cumulative(r - 1) <= t);
  }

  // Finite graphs saturate; W keeps growing by #E per layer.
  auto c = build_cycle(5);
  BallGrowth fin(c, finite_vertex(0));
  for (std::uint64_t t = 0; t < 500; ++t) {
    const int r = fin.w_inverse(t);
    CHECK(fin.cumulative(r) > t);
    CHECK(fin.cumulative(r - 1) <= t);
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(build_cycle(4)) == 2);
  CHECK(diameter(build_thick_cycle(4, 2)) == 2);
  CHECK(diameter(build_path(5)) == 4);
  CHECK(diameter(build_complete(6)) == 1);
  auto one_way = GraphModel::finite_unchecked({{1}, {2}, {}});
  CHECK_THROWS_AS(diameter(one_way), GraphError);
  // directed 3-cycle: 0->1->2->0
  CHECK(diameter(GraphModel::finite({{1}, {2}, {0}})) == 2);
}

TEST_CASE("thick cycle construction") {
  auto g42 = build_thick_cycle(4, 2);
  CHECK(g42.vertex_count() == 8);
  for (std::int64_t v = 0; v < 8; ++v) CHECK(g42.outdeg(finite_vertex(v)) == 5);

  auto tri = build_thick_cycle(3, 1);
  CHECK(tri.vertex_count() == 3);
  for (std::int64_t v = 0; v < 3; ++v) CHECK(tri.outdeg(finite_vertex(v)) == 2);

  auto g53 = build_thick_cycle(5, 3);
  CHECK(g53.vertex_count() == 15);
  for (std::int64_t v = 0; v < 15; ++v) CHECK(g53.outdeg(finite_vertex(v)) == 8);
  CHECK(validate_eulerian(g53).ok);

  // (x,y) ~ (x',y') iff x' = x +- 1 (mod l), or y' = y with x' != x.
  auto g = build_thick_cycle(6, 3);
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 3; ++y) {
      std::multiset<std::int64_t> expected;
      for (int x2 = 0; x2 < 6; ++x2) {
        for (int y2 = 0; y2 < 3; ++y2) {
          const bool short_range = x2 == (x + 1) % 6 || x2 == (x + 5) % 6;
          const bool long_range = x2 != x && y2 == y;
          if (short_range || long_range) expected.insert(thick_cycle_index(3, x2, y2));
        }
      }
      const auto out = g.finite_out(thick_cycle_index(3, x, y));
      CHECK(std::multiset<std::int64_t>(out.begin(), out.end()) == expected);
    }
  }
  CHECK_THROWS_AS(build_thick_cycle(2, 3), GraphError);
}

TEST_CASE("validate_eulerian") {
  CHECK(validate_eulerian(build_cycle(3)).ok);
  auto single = GraphModel::finite_unchecked({{1}, {}});
  auto report = validate_eulerian(single);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.violations.empty());
  CHECK(validate_eulerian(build_thick_cycle(6, 4)).ok);
  CHECK_THROWS_AS(GraphModel::finite({{1}, {}}), GraphError);
  // Balanced but disconnected.
  auto split = GraphModel::finite_unchecked({{1}, {0}, {3}, {2}});
  auto r2 = validate_eulerian(split);
  CHECK_FALSE(r2.ok);
  CHECK_FALSE(r2.connected);
}

TEST_CASE("load finite graph from text") {
  std::istringstream in("3 6\n0 1\n1 0\n1 2\n2 1\n2 0\n0 2\n");
  auto g = GraphModel::load(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 6);
  CHECK(heads(g, finite_vertex(0)) == std::vector<Vertex>{finite_vertex(1), finite_vertex(2)});

  std::istringstream bad("2 1\n0 1\n");
  CHECK_THROWS_AS(GraphModel::load(bad), GraphError);
  std::istringstream truncated("2 2\n0 1\n");
  CHECK_THROWS_AS(GraphModel::load(truncated), GraphError);
  CHECK_THROWS_AS(graph_kind_from_string("hex"), GraphError);
  CHECK(graph_kind_from_string("manhattan") == GraphKind::Manhattan);
}
