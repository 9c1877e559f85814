#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rotor/cell_store.hpp"
#include "rotor/config.hpp"
#include "rotor/graph.hpp"

namespace rotor {

/// Raised when a step would leave the world limit. The walk that threw is
/// left untouched at `time`, so its state can still be inspected.
class WalkAborted : public WorldLimitError {
 public:
  WalkAborted(const std::string& what, std::uint64_t time, Vertex position)
      : WorldLimitError(what), time_(time), position_(position) {}
  std::uint64_t time() const noexcept { return time_; }
  Vertex position() const noexcept { return position_; }

 private:
  std::uint64_t time_;
  Vertex position_;
};

/// One completed excursion: T(n) and e_n as a sorted (vertex, count) list.
/// A_n is the vertex column of `visits`.
struct ExcursionRecord {
  std::uint64_t index = 0;
  std::uint64_t end_time = 0;
  std::vector<std::pair<Vertex, std::uint64_t>> visits;
};

struct ExcursionLog {
  std::vector<ExcursionRecord> excursions;
  bool incomplete = false;  // budget ran out before the requested count
  std::uint64_t steps = 0;
};

/// Simple rotor walk with the retrospective convention: at each step the
/// rotor at the current vertex advances to its next slot, then the walker
/// follows it. The rotor at an unvisited vertex is the configuration's
/// slot, read on first departure.
///
/// Excursion n ends at T(n), the time of the (n * deg(o))-th return to the
/// origin o.
class RotorWalk {
 public:
  RotorWalk(const GraphModel& g, const ConfigProvider& config, Vertex origin);

  RotorWalk(const RotorWalk&) = delete;
  RotorWalk& operator=(const RotorWalk&) = delete;

  /// Advances one step; returns true if the step completed an excursion.
  bool step();

  const GraphModel& graph() const noexcept { return *g_; }
  Vertex origin() const noexcept { return origin_; }
  Vertex position() const noexcept { return position_; }
  std::uint64_t time() const noexcept { return time_; }
  std::uint64_t range_size() const noexcept { return range_size_; }
  std::uint64_t completed_excursions() const noexcept { return current_excursion_ - 1; }
  int origin_degree() const noexcept { return origin_deg_; }

  /// u_t(x) = #{0 <= s < t : X_s = x}.
  std::uint64_t departures(Vertex v) const;
  /// #{1 <= s <= t : X_s = x}; R_t is the support.
  std::uint64_t arrivals(Vertex v) const;
  std::uint64_t origin_returns() const { return arrivals(origin_); }
  /// Current rotor slot, or nothing if x was never exited.
  std::optional<int> rotor(Vertex v) const;

  /// Builds e_n for the excursion just completed; only valid right after
  /// step() returned true.
  ExcursionRecord last_excursion() const;

  /// Sorted R_t.
  std::vector<Vertex> range() const;

  template <class F>
  void for_each_cell(F&& f) const {
    store_.for_each(std::forward<F>(f));
  }

 private:
  const GraphModel* g_;
  const ConfigProvider* config_;
  Vertex origin_;
  int origin_deg_;
  CellStore store_;
  Vertex position_;
  std::optional<Vertex> arrived_from_;
  Cell* current_ = nullptr;
  std::uint64_t time_ = 0;
  std::uint64_t range_size_ = 0;
  std::uint32_t current_excursion_ = 1;
  std::vector<Vertex> touched_;
  std::vector<Vertex> finished_touched_;
  std::uint64_t finished_end_ = 0;
};

/// Runs until `n_max` excursions are complete or `step_budget` steps have
/// been taken. `on_excursion` (optional) sees the walk at each T(n).
ExcursionLog run_excursions(const GraphModel& g, const ConfigProvider& config, Vertex origin, std::uint64_t n_max,
                            std::uint64_t step_budget,
                            const std::function<void(const RotorWalk&, const ExcursionRecord&)>& on_excursion = {},
                            bool keep_records = true);

struct Checkpoint {
  std::uint64_t time = 0;
  std::uint64_t origin_departures = 0;  // u_t(o), counts time 0
  std::uint64_t origin_returns = 0;     // visits to o at times 1..t
  std::uint64_t range_size = 0;
  std::uint64_t completed_excursions = 0;
  std::vector<Vertex> range;  // filled when requested
};

struct Trajectory {
  std::vector<Checkpoint> checkpoints;  // ascending; the last one is time t
};

/// Runs exactly t steps, recording the requested checkpoints (values > t are
/// ignored) plus the final time.
Trajectory run_steps(const GraphModel& g, const ConfigProvider& config, Vertex origin, std::uint64_t t,
                     std::span<const std::uint64_t> checkpoints, bool capture_range = false);

}  // namespace rotor
