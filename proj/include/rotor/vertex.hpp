#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace rotor {

/// A vertex of a finite graph (x = index, y = 0) or a lattice site (x, y).
struct Vertex {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '(' << v.x << ',' << v.y << ')';
}

constexpr Vertex finite_vertex(std::int64_t index) { return Vertex{index, 0}; }

/// Compass directions in the clockwise order used by the square-lattice mechanism.
enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

constexpr Vertex step_toward(Vertex v, Direction d) {
  switch (d) {
    case Direction::North: return {v.x, v.y + 1};
    case Direction::East: return {v.x + 1, v.y};
    case Direction::South: return {v.x, v.y - 1};
    case Direction::West: return {v.x - 1, v.y};
  }
  return v;
}

constexpr Direction opposite(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

/// Direction of the unit move a -> b, if a and b are lattice neighbours.
constexpr bool direction_between(Vertex a, Vertex b, Direction& out) {
  const auto dx = b.x - a.x;
  const auto dy = b.y - a.y;
  if (dx == 0 && dy == 1) { out = Direction::North; return true; }
  if (dx == 1 && dy == 0) { out = Direction::East; return true; }
  if (dx == 0 && dy == -1) { out = Direction::South; return true; }
  if (dx == -1 && dy == 0) { out = Direction::West; return true; }
  return false;
}

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(v.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(v.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace rotor
