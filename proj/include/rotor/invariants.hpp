#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rotor/ball.hpp"
#include "rotor/walk.hpp"

namespace rotor {

/// Tally of invariant checks; keeps the first few failure messages.
struct InvariantTally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;

  void record(bool ok, const std::string& what);
  void merge(const InvariantTally& other);
  bool ok() const noexcept { return failures == 0; }
};

/// Checks the excursion structure at every T(n):
///   e_n(x) <= deg(x);  e_n(x) = deg(x) on A_{n-1};  A_n contains A_{n-1} and
///   its out-neighbours;  B(o,n) within A_n;  rotors on A_m unchanged at
///   every later T(N).
class ExcursionMonitor {
 public:
  ExcursionMonitor(const GraphModel& g, Vertex origin);

  void on_excursion(const RotorWalk& walk, const ExcursionRecord& rec);

  const InvariantTally& tally() const noexcept { return tally_; }

 private:
  const GraphModel* g_;
  BallGrowth balls_;
  std::vector<Vertex> previous_;  // A_{n-1}
  std::unordered_map<Vertex, int, VertexHash> settled_rotor_;
  InvariantTally tally_;
};

/// Pointwise range bounds at time t = walk.time(), with the odometer that
/// counts visits at times 1..t:
///   returns(o) < deg(o) W^{-1}(t);  visits(x) <= returns(o) + deg(x);
///   #R_t >= t / (deg(o) W^{-1}(t) + Delta_t - 1).
/// `check_all_vertices` controls the O(#R_t) middle check.
void check_range_bounds(const RotorWalk& walk, BallGrowth& balls, InvariantTally& tally,
                        bool check_all_vertices = true);

/// Bounds for a walk that has not completed its first excursion:
///   returns(o) < deg(o)  and  #R_t >= t / Delta_t.
void check_transient_bounds(const RotorWalk& walk, BallGrowth& balls, InvariantTally& tally);

}  // namespace rotor
