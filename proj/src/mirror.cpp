#include "rotor/mirror.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <sstream>

#include "rotor/mix.hpp"
#include "rotor/walk.hpp"

namespace rotor {

namespace {

bool odd_site(Vertex v) { return ((v.x + v.y) & 1) != 0; }

void require_mirror_lattice(GraphKind kind) {
  if (kind != GraphKind::Manhattan && kind != GraphKind::FLattice) {
    throw MirrorError("mirror fields exist only on the Manhattan and F-lattices, not '" +
                      std::string(to_string(kind)) + "'");
  }
}

// Exit direction of a light ray at v travelling in direction `in`, expressed
// without geometry: for each lattice and site class, closed and open give the
// two out-directions of v. Each row is a bijection {closed, open} -> out-edges.
//
//   Manhattan ("\" at even sites, "/" at odd sites; no mirror when open)
//     closed: travel turns 90 deg along the mirror, open: straight on.
//   F-lattice (always a mirror; "\" even / "/" odd when closed, swapped when open)
//     even site, in E: closed S, open N;  in W: closed N, open S
//     odd site,  in N: closed E, open W;  in S: closed W, open E
Direction coupled_exit(GraphKind kind, Vertex v, Direction in, bool open) {
  const bool odd = odd_site(v);
  if (kind == GraphKind::Manhattan) {
    if (open) return in;
    // "/" : N<->E, S<->W.  "\" : E<->S, W<->N.
    if (odd) {
      switch (in) {
        case Direction::North: return Direction::East;
        case Direction::East: return Direction::North;
        case Direction::South: return Direction::West;
        case Direction::West: return Direction::South;
      }
    }
    switch (in) {
      case Direction::East: return Direction::South;
      case Direction::South: return Direction::East;
      case Direction::West: return Direction::North;
      case Direction::North: return Direction::West;
    }
  }
  if (!odd) {
    if (in == Direction::East) return open ? Direction::North : Direction::South;
    if (in == Direction::West) return open ? Direction::South : Direction::North;
  } else {
    if (in == Direction::North) return open ? Direction::West : Direction::East;
    if (in == Direction::South) return open ? Direction::East : Direction::West;
  }
  std::ostringstream os;
  os << "F-lattice site " << v << " cannot be entered travelling " << static_cast<int>(in);
  throw MirrorError(os.str());
}

class CoupledSource final : public SlotSource {
 public:
  CoupledSource(std::shared_ptr<const PercolationField> field, GraphKind kind, Vertex origin)
      : field_(std::move(field)), kind_(kind), origin_(origin) {}

  int initial_slot(const GraphModel& g, Vertex v, std::optional<Vertex> from) const override {
    int exit_slot = 0;
    if (!from) {
      if (v != origin_) {
        std::ostringstream os;
        os << "coupled configuration queried at " << v << " without an arrival edge";
        throw ConfigError(os.str());
      }
      exit_slot = mirror_start_slot(*field_, v);
    } else {
      Direction in{};
      if (!direction_between(*from, v, in)) throw ConfigError("coupled configuration: arrival is not a lattice step");
      const Direction out = coupled_exit(kind_, v, in, field_->open(v));
      exit_slot = g.slot_toward(v, step_toward(v, out));
      if (exit_slot < 0) throw ConfigError("coupled configuration: exit is not an out-edge");
    }
    // The rotor advances before moving, so it starts one slot behind the exit.
    return (exit_slot + g.outdeg(v) - 1) % g.outdeg(v);
  }

  std::string describe() const override {
    return "mirror-coupled(" + std::string(to_string(kind_)) + ", seed=" + std::to_string(field_->seed()) + ")";
  }

 private:
  std::shared_ptr<const PercolationField> field_;
  GraphKind kind_;
  Vertex origin_;
};

struct Vec {
  std::int64_t dx, dy;
};

Vec reflect(Vec in, Diagonal mirror) {
  if (mirror == Diagonal::Slash) return {in.dy, in.dx};
  return {-in.dy, -in.dx};
}

// Doubled sup-norm of an L-point: |2a+1| vs |2b+1|.
std::int64_t doubled_norm(LPoint p) { return std::max(std::abs(2 * p.a + 1), std::abs(2 * p.b + 1)); }

struct AnnulusEdge {
  LPoint p, q;
  int winding;  // signed crossing of the positive x-axis going p -> q
};

std::vector<AnnulusEdge> closed_annulus_edges(const PercolationField& field, int ell) {
  if (ell < 1) throw std::invalid_argument("annulus needs l >= 1");
  std::vector<AnnulusEdge> edges;
  const std::int64_t lo = 2 * ell + 1, hi = 6 * ell - 1;
  for (std::int64_t x = -3 * ell; x <= 3 * ell; ++x) {
    for (std::int64_t y = -3 * ell; y <= 3 * ell; ++y) {
      const Vertex v{x, y};
      auto [p, q] = ev_endpoints(v);
      const auto np = doubled_norm(p), nq = doubled_norm(q);
      if (np < lo || np > hi || nq < lo || nq > hi) continue;
      if (field.open(v)) continue;
      int w = 0;
      if (y == 0 && x > 0) w = p.b < q.b ? 1 : -1;
      edges.push_back({p, q, w});
    }
  }
  return edges;
}

}  // namespace

Diagonal ev_orientation(Vertex v) { return odd_site(v) ? Diagonal::Slash : Diagonal::Backslash; }

std::pair<LPoint, LPoint> ev_endpoints(Vertex v) {
  if (odd_site(v)) return {LPoint{v.x - 1, v.y - 1}, LPoint{v.x, v.y}};
  return {LPoint{v.x - 1, v.y}, LPoint{v.x, v.y - 1}};
}

PercolationField PercolationField::fair(std::uint64_t seed) {
  PercolationField f;
  f.seed_ = seed;
  return f;
}

PercolationField PercolationField::constant(bool open) {
  PercolationField f;
  f.constant_ = open;
  return f;
}

void PercolationField::plant(Vertex v, bool open) { planted_[v] = open; }

bool PercolationField::open(Vertex v) const {
  if (!planted_.empty()) {
    auto it = planted_.find(v);
    if (it != planted_.end()) return it->second;
  }
  if (constant_) return *constant_;
  return uniform_below(seed_, tags::kPercolation, v.x, v.y, 2) == 1;
}

MirrorKind mirror_at(const PercolationField& field, GraphKind kind, Vertex v) {
  require_mirror_lattice(kind);
  if (!field.open(v)) return MirrorKind::Parallel;
  return kind == GraphKind::FLattice ? MirrorKind::Perpendicular : MirrorKind::None;
}

std::optional<Diagonal> mirror_diagonal(const PercolationField& field, GraphKind kind, Vertex v) {
  const Diagonal ev = ev_orientation(v);
  switch (mirror_at(field, kind, v)) {
    case MirrorKind::None: return std::nullopt;
    case MirrorKind::Parallel: return ev;
    case MirrorKind::Perpendicular: return ev == Diagonal::Slash ? Diagonal::Backslash : Diagonal::Slash;
  }
  return std::nullopt;
}

int mirror_start_slot(const PercolationField& field, Vertex origin) {
  return static_cast<int>(uniform_below(field.seed(), tags::kMirrorStart, origin.x, origin.y, 2));
}

ConfigProvider coupled_rotor_config(std::shared_ptr<const PercolationField> field, GraphKind kind, Vertex origin) {
  require_mirror_lattice(kind);
  return ConfigProvider(ConfigProvider::Custom{std::make_shared<CoupledSource>(std::move(field), kind, origin)});
}

MirrorTrajectory first_glance_mirror_walk(const PercolationField& field, const GraphModel& g, Vertex origin,
                                          std::uint64_t t) {
  require_mirror_lattice(g.kind());
  MirrorTrajectory traj;
  traj.path.reserve(t + 1);
  traj.path.push_back(origin);
  std::unordered_map<Vertex, Vertex, VertexHash> last_exit;
  Vertex at = origin;
  Vec travel{0, 0};
  for (std::uint64_t s = 0; s < t; ++s) {
    Vertex next;
    auto it = last_exit.find(at);
    if (it == last_exit.end()) {
      if (s == 0) {
        next = g.head(at, mirror_start_slot(field, at));
      } else {
        const auto mirror = mirror_diagonal(field, g.kind(), at);
        const Vec out = mirror ? reflect(travel, *mirror) : travel;
        next = {at.x + out.dx, at.y + out.dy};
      }
      if (g.slot_toward(at, next) < 0) {
        std::ostringstream os;
        os << "mirror walk step " << at << " -> " << next << " is not a lattice edge (time " << s << ")";
        throw MirrorError(os.str());
      }
      traj.assigned.emplace(at, next);
    } else {
      // Degree two: the rotor alternates between the two out-edges.
      const auto out = g.out_edges(at);
      next = out[0].head == it->second ? out[1].head : out[0].head;
    }
    last_exit[at] = next;
    travel = {next.x - at.x, next.y - at.y};
    at = next;
    traj.path.push_back(at);
  }
  return traj;
}

bool find_surrounding_cycle(const PercolationField& field, int ell) {
  const auto edges = closed_annulus_edges(field, ell);
  const std::int64_t side = 6 * ell + 2;
  const std::int64_t base = 3 * ell + 1;
  auto id = [&](LPoint p) { return static_cast<std::size_t>((p.a + base) * side + (p.b + base)); };
  // adjacency with winding weights
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(static_cast<std::size_t>(side * side));
  for (const auto& e : edges) {
    adj[id(e.p)].emplace_back(id(e.q), e.winding);
    adj[id(e.q)].emplace_back(id(e.p), -e.winding);
  }
  constexpr int kUnseen = std::numeric_limits<int>::min();
  std::vector<int> sheet(adj.size(), kUnseen);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (adj[s].empty() || sheet[s] != kUnseen) continue;
    sheet[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (const auto& [w, wind] : adj[u]) {
        const int want = sheet[u] + wind;
        if (sheet[w] == kUnseen) {
          sheet[w] = want;
          queue.push_back(w);
        } else if (sheet[w] != want) {
          return true;
        }
      }
    }
  }
  return false;
}

bool surrounding_cycle_by_separation(const PercolationField& field, int ell) {
  const auto edges = closed_annulus_edges(field, ell);
  // Quarter units: Z^2 vertex (x, y) -> (4x, 4y); L-point (a, b) -> (4a+2, 4b+2).
  const std::int64_t inner = 4 * ell + 2, outer = 12 * ell - 2;
  const std::int64_t side = 2 * outer + 1;
  auto idx = [&](std::int64_t px, std::int64_t py) { return static_cast<std::size_t>((px + outer) * side + py + outer); };
  std::vector<std::uint8_t> state(static_cast<std::size_t>(side * side), 0);  // 0 free, 1 barrier, 2 reached
  for (const auto& e : edges) {
    const std::int64_t px = 4 * e.p.a + 2, py = 4 * e.p.b + 2;
    const std::int64_t sx = e.q.a > e.p.a ? 1 : -1, sy = e.q.b > e.p.b ? 1 : -1;
    for (int k = 0; k <= 4; ++k) state[idx(px + k * sx, py + k * sy)] = 1;
  }
  auto norm = [](std::int64_t px, std::int64_t py) { return std::max(std::abs(px), std::abs(py)); };
  std::vector<std::pair<std::int64_t, std::int64_t>> stack;
  for (std::int64_t px = -outer; px <= outer; ++px) {
    for (std::int64_t py = -outer; py <= outer; ++py) {
      if (norm(px, py) == inner && state[idx(px, py)] == 0) {
        state[idx(px, py)] = 2;
        stack.emplace_back(px, py);
      }
    }
  }
  while (!stack.empty()) {
    const auto [px, py] = stack.back();
    stack.pop_back();
    if (norm(px, py) == outer) return false;
    const std::int64_t nbr[4][2] = {{px + 1, py}, {px - 1, py}, {px, py + 1}, {px, py - 1}};
    for (const auto& n : nbr) {
      const auto m = norm(n[0], n[1]);
      if (m < inner || m > outer) continue;
      auto& s = state[idx(n[0], n[1])];
      if (s != 0) continue;
      s = 2;
      stack.emplace_back(n[0], n[1]);
    }
  }
  return true;
}

ReturnCount return_count_experiment(GraphKind kind, std::uint64_t seed, std::span<const std::uint64_t> times,
                                    std::int64_t world_limit) {
  if (times.empty()) throw std::invalid_argument("return_count_experiment: no checkpoint times");
  auto g = GraphModel::lattice(kind, world_limit);
  auto field = std::make_shared<const PercolationField>(PercolationField::fair(seed));
  auto cfg = coupled_rotor_config(field, kind);
  std::vector<std::uint64_t> sorted(times.begin(), times.end());
  std::sort(sorted.begin(), sorted.end());
  ReturnCount out;
  out.seed = seed;
  out.kind = kind;
  RotorWalk walk(g, cfg, {0, 0});
  try {
    for (auto t : sorted) {
      if (t < 1) throw std::invalid_argument("return_count_experiment: t must be >= 1");
      while (walk.time() < t) walk.step();
      out.times.push_back(t);
      out.returns.push_back(walk.origin_returns());
      out.odometer.push_back(walk.departures({0, 0}));
      out.range_sizes.push_back(walk.range_size());
    }
  } catch (const WalkAborted&) {
    out.aborted = true;
  }
  return out;
}

CycleLemmaRun check_cycle_lemma(GraphKind kind, std::uint64_t seed, int ell, std::uint64_t budget) {
  auto field = std::make_shared<const PercolationField>(PercolationField::fair(seed));
  CycleLemmaRun run;
  run.cycle = find_surrounding_cycle(*field, ell);
  auto g = GraphModel::lattice(kind);
  auto cfg = coupled_rotor_config(field, kind);
  RotorWalk walk(g, cfg, {0, 0});
  const std::int64_t limit = 3 * ell;
  while (walk.time() < budget) {
    walk.step();
    const Vertex p = walk.position();
    if (std::max(std::abs(p.x), std::abs(p.y)) > limit) {
      run.exited = true;
      break;
    }
  }
  run.steps = walk.time();
  run.returns_before_exit = walk.origin_returns();
  return run;
}

}  // namespace rotor
