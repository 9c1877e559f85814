#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "rotor/graph.hpp"

namespace rotor {

/// Per-vertex walk state. Only vertices the walk has touched are materialised.
struct Cell {
  std::uint64_t departures = 0;       // #{0 <= s < t : X_s = x}
  std::uint64_t arrivals = 0;         // #{1 <= s <= t : X_s = x}
  std::uint64_t mark_departures = 0;  // departures when `mark` was last set
  std::uint32_t mark = 0;
  std::int32_t rotor = -1;            // current slot, -1 before the first exit

  bool touched() const noexcept { return rotor >= 0 || arrivals > 0; }
};

/// Sparse vertex -> Cell map: a dense vector for finite graphs, 16x16 tiles
/// in a hash map for lattices. Cell addresses are stable.
class CellStore {
 public:
  explicit CellStore(const GraphModel& g);

  Cell& at(Vertex v);
  const Cell* find(Vertex v) const;

  template <class F>
  void for_each(F&& f) const {
    if (finite_) {
      for (std::size_t i = 0; i < dense_.size(); ++i) {
        if (dense_[i].touched()) f(finite_vertex(static_cast<std::int64_t>(i)), dense_[i]);
      }
      return;
    }
    for (const auto& [key, tile] : tiles_) {
      for (int i = 0; i < kTileCells; ++i) {
        const Cell& c = tile->cells[static_cast<std::size_t>(i)];
        if (c.touched()) f(Vertex{tile->base.x + (i & kMask), tile->base.y + (i >> kShift)}, c);
      }
    }
  }

 private:
  static constexpr int kShift = 4;
  static constexpr int kSide = 1 << kShift;
  static constexpr int kMask = kSide - 1;
  static constexpr int kTileCells = kSide * kSide;

  struct Tile {
    Vertex base;
    std::array<Cell, kTileCells> cells{};
  };

  static std::uint64_t tile_key(Vertex v) {
    const auto tx = static_cast<std::uint32_t>(static_cast<std::int32_t>(v.x >> kShift));
    const auto ty = static_cast<std::uint32_t>(static_cast<std::int32_t>(v.y >> kShift));
    return (static_cast<std::uint64_t>(tx) << 32) | ty;
  }
  static int tile_index(Vertex v) {
    return static_cast<int>(((v.y & kMask) << kShift) | (v.x & kMask));
  }

  bool finite_;
  std::vector<Cell> dense_;
  std::unordered_map<std::uint64_t, std::unique_ptr<Tile>> tiles_;
  std::uint64_t cached_key_ = 0;
  Tile* cached_tile_ = nullptr;
};

}  // namespace rotor
