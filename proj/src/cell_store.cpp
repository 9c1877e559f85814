#include "rotor/cell_store.hpp"

namespace rotor {

CellStore::CellStore(const GraphModel& g) : finite_(g.is_finite()) {
  if (finite_) dense_.resize(g.vertex_count());
}

Cell& CellStore::at(Vertex v) {
  if (finite_) return dense_[static_cast<std::size_t>(v.x)];
  const auto key = tile_key(v);
  if (cached_tile_ == nullptr || key != cached_key_) {
    auto& slot = tiles_[key];
    if (!slot) {
      slot = std::make_unique<Tile>();
      slot->base = Vertex{(v.x >> kShift) << kShift, (v.y >> kShift) << kShift};
    }
    cached_key_ = key;
    cached_tile_ = slot.get();
  }
  return cached_tile_->cells[static_cast<std::size_t>(tile_index(v))];
}

const Cell* CellStore::find(Vertex v) const {
  if (finite_) {
    if (v.x < 0 || static_cast<std::size_t>(v.x) >= dense_.size()) return nullptr;
    return &dense_[static_cast<std::size_t>(v.x)];
  }
  auto it = tiles_.find(tile_key(v));
  if (it == tiles_.end()) return nullptr;
  return &it->second->cells[static_cast<std::size_t>(tile_index(v))];
}

}  // namespace rotor
