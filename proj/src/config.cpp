#include "rotor/config.hpp"

#include <limits>
#include <sstream>

#include "rotor/mix.hpp"

namespace rotor {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int uniform_slot(const GraphModel& g, std::uint64_t seed, Vertex v) {
  const int d = g.outdeg(v);
  return static_cast<int>(uniform_below(seed, tags::kUniformRotor, v.x, v.y, static_cast<std::uint32_t>(d)));
}

// Slots on Z^2 are N=0, E=1, S=2, W=3.
int diamond_slot(Vertex origin, Vertex v) {
  const auto dx = v.x - origin.x;
  const auto dy = v.y - origin.y;
  if (dx == 0 && dy == 0) return 0;
  if (dy == 0) return dx > 0 ? 2 : 0;
  if (dx == 0) return dy > 0 ? 1 : 3;
  if (dx > 0) return dy > 0 ? 1 : 2;
  return dy > 0 ? 0 : 3;
}

// k >= 1 if v = origin + k * ray.
std::int64_t ray_index(Vertex origin, Direction ray, Vertex v) {
  switch (ray) {
    case Direction::East: return v.y == origin.y && v.x > origin.x ? v.x - origin.x : 0;
    case Direction::West: return v.y == origin.y && v.x < origin.x ? origin.x - v.x : 0;
    case Direction::North: return v.x == origin.x && v.y > origin.y ? v.y - origin.y : 0;
    case Direction::South: return v.x == origin.x && v.y < origin.y ? origin.y - v.y : 0;
  }
  return 0;
}

void check_slot(const GraphModel& g, Vertex v, int slot) {
  if (slot < 0 || slot >= g.outdeg(v)) {
    std::ostringstream os;
    os << "configured slot " << slot << " at " << v << " exceeds outdeg " << g.outdeg(v);
    throw ConfigError(os.str());
  }
}

}  // namespace

int ConfigProvider::initial_slot(const GraphModel& g, Vertex v, std::optional<Vertex> from) const {
  return std::visit(
      overloaded{
          [&](const Uniform& u) { return uniform_slot(g, u.seed, v); },
          [&](const DiamondZ2& d) { return diamond_slot(d.origin, v); },
          [&](const PathToOrigin& p) {
            if (ray_index(p.origin, p.ray, v) > 0) {
              const int s = g.slot_toward(v, step_toward(v, opposite(p.ray)));
              if (s < 0) {
                std::ostringstream os;
                os << "no edge from " << v << " back toward the origin";
                throw ConfigError(os.str());
              }
              return s;
            }
            return uniform_slot(g, p.aux_seed, v);
          },
          [&](const TreeToOrigin& t) {
            g.require(v);
            return t.slots.at(static_cast<std::size_t>(v.x));
          },
          [&](const Explicit& e) {
            auto it = e.slots.find(v);
            if (it == e.slots.end()) {
              std::ostringstream os;
              os << "explicit configuration has no rotor at " << v;
              throw ConfigError(os.str());
            }
            check_slot(g, v, it->second);
            return it->second;
          },
          [&](const Custom& c) { return c.source->initial_slot(g, v, from); },
      },
      kind_);
}

std::string ConfigProvider::describe() const {
  return std::visit(overloaded{
                        [](const Uniform& u) { return "uniform(seed=" + std::to_string(u.seed) + ")"; },
                        [](const DiamondZ2&) { return std::string("diamond"); },
                        [](const PathToOrigin& p) {
                          return "path-to-origin(aux_seed=" + std::to_string(p.aux_seed) + ")";
                        },
                        [](const TreeToOrigin&) { return std::string("tree-to-origin"); },
                        [](const Explicit& e) { return "explicit(" + std::to_string(e.slots.size()) + ")"; },
                        [](const Custom& c) { return c.source->describe(); },
                    },
                    kind_);
}

ConfigProvider ConfigProvider::load_explicit(std::istream& in) {
  std::unordered_map<Vertex, int, VertexHash> slots;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::int64_t x = 0, y = 0;
    int slot = 0;
    if (!(ls >> x >> y >> slot) || slot < 0) {
      throw ConfigError("explicit configuration line " + std::to_string(lineno) + ": expected 'x y slot'");
    }
    slots[Vertex{x, y}] = slot;
  }
  return explicit_map(std::move(slots));
}

ConfigProvider diamond_config_z2(Vertex origin) { return ConfigProvider(ConfigProvider::DiamondZ2{origin}); }

ConfigProvider path_to_origin_config(const GraphModel& g, Vertex origin, std::uint64_t aux_seed, Direction ray) {
  if (g.is_finite()) throw ConfigError("path-to-origin configuration needs an infinite lattice");
  g.require(origin);
  for (int k = 1; k <= 2; ++k) {
    Vertex v = origin;
    for (int i = 0; i < k; ++i) v = step_toward(v, ray);
    if (!g.contains(v) || g.slot_toward(v, step_toward(v, opposite(ray))) < 0) {
      throw ConfigError("lattice '" + std::string(to_string(g.kind())) +
                        "' has no directed ray toward the origin in the requested direction");
    }
  }
  return ConfigProvider(ConfigProvider::PathToOrigin{origin, ray, aux_seed});
}

ConfigProvider tree_to_origin_config(const GraphModel& g, Vertex origin) {
  if (!g.is_finite()) throw ConfigError("tree-to-origin configuration needs a finite graph");
  g.require(origin);
  const auto n = g.vertex_count();
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kUnreached);
  std::vector<std::int64_t> queue{origin.x};
  dist[static_cast<std::size_t>(origin.x)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (const auto& tail : g.in_neighbors(finite_vertex(x))) {
      auto& d = dist[static_cast<std::size_t>(tail.x)];
      if (d == kUnreached) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(tail.x);
      }
    }
  }
  std::vector<int> slots(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (dist[u] == kUnreached) throw ConfigError("vertex " + std::to_string(u) + " cannot reach the origin");
    if (static_cast<std::int64_t>(u) == origin.x) continue;
    const auto out = g.finite_out(static_cast<std::int64_t>(u));
    std::int64_t best = -1;
    int best_slot = -1;
    for (std::size_t s = 0; s < out.size(); ++s) {
      const auto w = out[s];
      if (dist[static_cast<std::size_t>(w)] == dist[u] - 1 && (best < 0 || w < best)) {
        best = w;
        best_slot = static_cast<int>(s);
      }
    }
    slots[u] = best_slot;
  }
  return ConfigProvider(ConfigProvider::TreeToOrigin{origin, std::move(slots)});
}

}  // namespace rotor
