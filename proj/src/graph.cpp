#include "rotor/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <sstream>

namespace rotor {

namespace {

bool even(std::int64_t a) { return (a & 1) == 0; }

struct DirList {
  std::array<Direction, 4> dirs{};
  int size = 0;
};

// Rank in the lexicographic order E < N < S < W.
int lex_rank(Direction d) {
  switch (d) {
    case Direction::East: return 0;
    case Direction::North: return 1;
    case Direction::South: return 2;
    case Direction::West: return 3;
  }
  return 4;
}

DirList lattice_dirs(GraphKind kind, Vertex v) {
  using enum Direction;
  switch (kind) {
    case GraphKind::Z2: return {{North, East, South, West}, 4};
    case GraphKind::Line: return {{East, West}, 2};
    case GraphKind::Comb:
      if (v.y == 0) return {{North, East, South, West}, 4};
      return {{North, South}, 2};
    case GraphKind::Manhattan: {
      const Direction row = even(v.y) ? East : West;
      const Direction col = even(v.x) ? South : North;
      if (lex_rank(row) < lex_rank(col)) return {{row, col}, 2};
      return {{col, row}, 2};
    }
    case GraphKind::FLattice:
      if (even(v.x + v.y)) return {{North, South}, 2};
      return {{East, West}, 2};
    case GraphKind::Finite: break;
  }
  return {};
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Finite: return "finite";
    case GraphKind::Z2: return "z2";
    case GraphKind::Line: return "line";
    case GraphKind::Comb: return "comb";
    case GraphKind::Manhattan: return "manhattan";
    case GraphKind::FLattice: return "flattice";
  }
  return "unknown";
}

GraphKind graph_kind_from_string(std::string_view name) {
  for (auto k : {GraphKind::Finite, GraphKind::Z2, GraphKind::Line, GraphKind::Comb,
                 GraphKind::Manhattan, GraphKind::FLattice}) {
    if (to_string(k) == name) return k;
  }
  throw GraphError("unknown graph kind '" + std::string(name) + "'");
}

GraphModel GraphModel::lattice(GraphKind kind, std::int64_t world_limit) {
  if (kind == GraphKind::Finite) throw GraphError("lattice(): Finite is not a lattice kind");
  if (world_limit < 1 || world_limit > kDefaultWorldLimit) {
    throw GraphError("world limit must lie in [1, 2^31-2]");
  }
  GraphModel g;
  g.kind_ = kind;
  g.world_limit_ = world_limit;
  return g;
}

GraphModel GraphModel::finite_unchecked(std::vector<std::vector<std::int64_t>> out_lists) {
  GraphModel g;
  g.kind_ = GraphKind::Finite;
  const auto n = static_cast<std::int64_t>(out_lists.size());
  g.world_limit_ = n;
  g.offsets_.assign(out_lists.size() + 1, 0);
  std::vector<std::int64_t> in_count(out_lists.size(), 0);
  for (std::size_t v = 0; v < out_lists.size(); ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::int64_t>(out_lists[v].size());
    for (auto w : out_lists[v]) {
      if (w < 0 || w >= n) {
        throw GraphError("edge " + std::to_string(v) + "->" + std::to_string(w) +
                         " has head outside [0, " + std::to_string(n) + ")");
      }
      ++in_count[static_cast<std::size_t>(w)];
    }
  }
  g.targets_.reserve(static_cast<std::size_t>(g.offsets_.back()));
  for (auto& list : out_lists) g.targets_.insert(g.targets_.end(), list.begin(), list.end());

  g.in_offsets_.assign(out_lists.size() + 1, 0);
  for (std::size_t v = 0; v < out_lists.size(); ++v) g.in_offsets_[v + 1] = g.in_offsets_[v] + in_count[v];
  g.in_sources_.assign(g.targets_.size(), 0);
  std::vector<std::int64_t> fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t v = 0; v < out_lists.size(); ++v) {
    for (auto w : out_lists[v]) {
      g.in_sources_[static_cast<std::size_t>(fill[static_cast<std::size_t>(w)]++)] = static_cast<std::int64_t>(v);
    }
  }
  return g;
}

GraphModel GraphModel::finite(std::vector<std::vector<std::int64_t>> out_lists) {
  auto g = finite_unchecked(std::move(out_lists));
  auto report = validate_eulerian(g);
  if (!report.ok) {
    std::string msg = "graph is not a connected Eulerian digraph";
    if (!report.violations.empty()) msg += ": " + report.violations.front();
    throw GraphError(msg);
  }
  return g;
}

GraphModel GraphModel::load(std::istream& in) {
  std::int64_t n = 0, m = 0;
  if (!(in >> n >> m) || n <= 0 || m < 0) throw GraphError("graph file: expected header 'n m'");
  std::vector<std::vector<std::int64_t>> lists(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t tail = 0, head = 0;
    if (!(in >> tail >> head)) {
      throw GraphError("graph file: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    }
    if (tail < 0 || tail >= n) throw GraphError("graph file: tail " + std::to_string(tail) + " out of range");
    lists[static_cast<std::size_t>(tail)].push_back(head);
  }
  return finite(std::move(lists));
}

std::size_t GraphModel::vertex_count() const {
  if (!is_finite()) throw GraphError("vertex_count() on an infinite lattice");
  return offsets_.size() - 1;
}

std::size_t GraphModel::edge_count() const {
  if (!is_finite()) throw GraphError("edge_count() on an infinite lattice");
  return targets_.size();
}

bool GraphModel::contains(Vertex v) const noexcept {
  if (is_finite()) return v.y == 0 && v.x >= 0 && v.x < static_cast<std::int64_t>(offsets_.size() - 1);
  if (kind_ == GraphKind::Line && v.y != 0) return false;
  return v.x >= -world_limit_ && v.x <= world_limit_ && v.y >= -world_limit_ && v.y <= world_limit_;
}

void GraphModel::require(Vertex v) const {
  if (contains(v)) return;
  std::ostringstream os;
  if (is_finite()) {
    os << "vertex " << v << " is not a vertex of this " << vertex_count() << "-vertex graph";
    throw std::out_of_range(os.str());
  }
  if (kind_ == GraphKind::Line && v.y != 0) {
    os << "vertex " << v << " is not on the line";
    throw std::out_of_range(os.str());
  }
  os << "vertex " << v << " outside world limit " << world_limit_;
  throw WorldLimitError(os.str());
}

int GraphModel::outdeg(Vertex v) const {
  require(v);
  if (is_finite()) {
    const auto i = static_cast<std::size_t>(v.x);
    return static_cast<int>(offsets_[i + 1] - offsets_[i]);
  }
  return lattice_dirs(kind_, v).size;
}

int GraphModel::indeg(Vertex v) const {
  require(v);
  if (is_finite()) {
    const auto i = static_cast<std::size_t>(v.x);
    return static_cast<int>(in_offsets_[i + 1] - in_offsets_[i]);
  }
  return static_cast<int>(in_neighbors(v).size());
}

Vertex GraphModel::head(Vertex v, int slot) const {
  const int d = outdeg(v);
  if (slot < 0 || slot >= d) throw std::out_of_range("slot " + std::to_string(slot) + " out of range");
  if (is_finite()) return finite_vertex(targets_[static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v.x)] + slot)]);
  return step_toward(v, lattice_dirs(kind_, v).dirs[static_cast<std::size_t>(slot)]);
}

Direction GraphModel::lattice_direction(Vertex v, int slot) const {
  if (is_finite() || kind_ == GraphKind::Line) throw GraphError("lattice_direction() needs a planar lattice");
  const auto dl = lattice_dirs(kind_, v);
  if (slot < 0 || slot >= dl.size) throw std::out_of_range("slot out of range");
  return dl.dirs[static_cast<std::size_t>(slot)];
}

std::vector<DirectedEdge> GraphModel::out_edges(Vertex v) const {
  const int d = outdeg(v);
  std::vector<DirectedEdge> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int s = 0; s < d; ++s) out.push_back({v, head(v, s), s});
  return out;
}

std::vector<Vertex> GraphModel::in_neighbors(Vertex v) const {
  require(v);
  std::vector<Vertex> in;
  if (is_finite()) {
    const auto i = static_cast<std::size_t>(v.x);
    for (auto k = in_offsets_[i]; k < in_offsets_[i + 1]; ++k) in.push_back(finite_vertex(in_sources_[static_cast<std::size_t>(k)]));
    return in;
  }
  using enum Direction;
  switch (kind_) {
    case GraphKind::Z2:
      in = {step_toward(v, North), step_toward(v, East), step_toward(v, South), step_toward(v, West)};
      break;
    case GraphKind::Line:
      in = {step_toward(v, East), step_toward(v, West)};
      break;
    case GraphKind::Comb:
      if (v.y == 0) {
        in = {step_toward(v, North), step_toward(v, East), step_toward(v, South), step_toward(v, West)};
      } else {
        in = {step_toward(v, North), step_toward(v, South)};
      }
      break;
    case GraphKind::Manhattan:
      in = {even(v.y) ? step_toward(v, West) : step_toward(v, East),
            even(v.x) ? step_toward(v, North) : step_toward(v, South)};
      break;
    case GraphKind::FLattice:
      if (even(v.x + v.y)) {
        in = {step_toward(v, East), step_toward(v, West)};
      } else {
        in = {step_toward(v, North), step_toward(v, South)};
      }
      break;
    case GraphKind::Finite: break;
  }
  return in;
}

int GraphModel::slot_toward(Vertex v, Vertex w) const {
  const int d = outdeg(v);
  for (int s = 0; s < d; ++s) {
    if (head(v, s) == w) return s;
  }
  return -1;
}

std::span<const std::int64_t> GraphModel::finite_out(std::int64_t index) const {
  if (!is_finite()) throw GraphError("finite_out() on an infinite lattice");
  const auto i = static_cast<std::size_t>(index);
  return {targets_.data() + offsets_[i], static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

EulerianReport validate_eulerian(const GraphModel& g) {
  EulerianReport report;
  if (!g.is_finite()) return report;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  for (std::int64_t v = 0; v < n; ++v) {
    const int out = g.outdeg(finite_vertex(v));
    const int in = g.indeg(finite_vertex(v));
    if (out != in) {
      report.ok = false;
      report.violations.push_back("indeg(" + std::to_string(v) + ")=" + std::to_string(in) +
                                  " != outdeg=" + std::to_string(out));
    } else if (out == 0) {
      report.ok = false;
      report.violations.push_back("vertex " + std::to_string(v) + " has no edges");
    }
  }
  // Weak connectivity of the underlying graph.
  std::vector<std::vector<std::int64_t>> undirected(static_cast<std::size_t>(n));
  for (std::int64_t v = 0; v < n; ++v) {
    for (auto w : g.finite_out(v)) {
      undirected[static_cast<std::size_t>(v)].push_back(w);
      undirected[static_cast<std::size_t>(w)].push_back(v);
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<std::int64_t> q;
  q.push(0);
  seen[0] = true;
  std::int64_t reached = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : undirected[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n) {
    report.ok = false;
    report.connected = false;
    report.violations.push_back("underlying graph is disconnected (" + std::to_string(reached) + " of " +
                                std::to_string(n) + " vertices reachable from 0)");
  }
  return report;
}

GraphModel bidirected(std::size_t n, std::span<const std::pair<std::int64_t, std::int64_t>> edges) {
  std::vector<std::vector<std::int64_t>> lists(n);
  for (auto [a, b] : edges) {
    lists.at(static_cast<std::size_t>(a)).push_back(b);
    lists.at(static_cast<std::size_t>(b)).push_back(a);
  }
  return GraphModel::finite(std::move(lists));
}

GraphModel build_thick_cycle(int length, int thickness) {
  if (length < 3) throw GraphError("thick cycle needs length >= 3");
  if (thickness < 1) throw GraphError("thick cycle needs thickness >= 1");
  const auto idx = [thickness](int x, int y) { return thick_cycle_index(thickness, x, y); };
  std::vector<std::vector<std::int64_t>> lists(static_cast<std::size_t>(length) * static_cast<std::size_t>(thickness));
  for (int x = 0; x < length; ++x) {
    const int right = (x + 1) % length;
    const int left = (x + length - 1) % length;
    for (int y = 0; y < thickness; ++y) {
      auto& out = lists[static_cast<std::size_t>(idx(x, y))];
      out.reserve(static_cast<std::size_t>(2 * thickness + length - 3));
      for (int y2 = 0; y2 < thickness; ++y2) out.push_back(idx(right, y2));
      for (int y2 = 0; y2 < thickness; ++y2) out.push_back(idx(left, y2));
      for (int x2 = 0; x2 < length; ++x2) {
        if (x2 != x && x2 != right && x2 != left) out.push_back(idx(x2, y));
      }
    }
  }
  return GraphModel::finite(std::move(lists));
}

GraphModel build_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<std::vector<std::int64_t>> lists(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) lists[static_cast<std::size_t>(v)] = {(v + 1) % n, (v + n - 1) % n};
  return GraphModel::finite(std::move(lists));
}

GraphModel build_path(int n) {
  if (n < 2) throw GraphError("path needs n >= 2");
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return bidirected(static_cast<std::size_t>(n), edges);
}

GraphModel build_complete(int n) {
  if (n < 2) throw GraphError("complete graph needs n >= 2");
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return bidirected(static_cast<std::size_t>(n), edges);
}

GraphModel build_star(int leaves) {
  if (leaves < 1) throw GraphError("star needs at least one leaf");
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int l = 1; l <= leaves; ++l) edges.emplace_back(0, l);
  return bidirected(static_cast<std::size_t>(leaves + 1), edges);
}

}  // namespace rotor
