#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rotor/graph.hpp"

namespace rotor {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extension point for configurations defined outside this module.
/// `from` is the vertex the walker arrived from on its first visit to v,
/// empty for the starting vertex.
class SlotSource {
 public:
  virtual ~SlotSource() = default;
  virtual int initial_slot(const GraphModel& g, Vertex v, std::optional<Vertex> from) const = 0;
  virtual std::string describe() const = 0;
};

/// Initial rotor configuration. Every query is a pure function of the
/// provider's parameters and the vertex (and arrival vertex, for sources
/// that use it), so providers are freely shareable.
class ConfigProvider {
 public:
  struct Uniform {
    std::uint64_t seed = 0;
  };
  struct DiamondZ2 {
    Vertex origin;
  };
  struct PathToOrigin {
    Vertex origin;
    Direction ray = Direction::East;
    std::uint64_t aux_seed = 0;
  };
  struct TreeToOrigin {
    Vertex origin;
    std::vector<int> slots;
  };
  struct Explicit {
    std::unordered_map<Vertex, int, VertexHash> slots;
  };
  struct Custom {
    std::shared_ptr<const SlotSource> source;
  };
  using Kind = std::variant<Uniform, DiamondZ2, PathToOrigin, TreeToOrigin, Explicit, Custom>;

  explicit ConfigProvider(Kind kind) : kind_(std::move(kind)) {}

  static ConfigProvider uniform(std::uint64_t seed) { return ConfigProvider(Uniform{seed}); }
  static ConfigProvider explicit_map(std::unordered_map<Vertex, int, VertexHash> slots) {
    return ConfigProvider(Explicit{std::move(slots)});
  }
  /// Lines "x y slot"; blank lines and lines starting with '#' are skipped.
  static ConfigProvider load_explicit(std::istream& in);

  int initial_slot(const GraphModel& g, Vertex v, std::optional<Vertex> from = std::nullopt) const;

  const Kind& kind() const noexcept { return kind_; }
  std::string describe() const;

 private:
  Kind kind_;
};

/// Layered configuration on Z^2 (clockwise N,E,S,W mechanism) whose n-th
/// excursion from `origin` visits exactly the diamond B(origin, n).
ConfigProvider diamond_config_z2(Vertex origin = {0, 0});

/// Rotors on the ray origin + k*ray (k >= 1) point back toward the origin;
/// every other rotor is uniform from `aux_seed`. Throws ConfigError when the
/// lattice has no such directed ray (finite graphs, Manhattan, F-lattice).
ConfigProvider path_to_origin_config(const GraphModel& g, Vertex origin, std::uint64_t aux_seed,
                                     Direction ray = Direction::East);

/// Spanning in-tree toward `origin` along shortest paths; among equally
/// short next hops the smallest vertex index wins. The root keeps slot 0.
ConfigProvider tree_to_origin_config(const GraphModel& g, Vertex origin);

}  // namespace rotor
