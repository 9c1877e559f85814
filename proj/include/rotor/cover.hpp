#pragma once

// Cover times of rotor walk on finite Eulerian graphs, random-walk hitting
// times, and the quantity K that bounds cover times from above.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rotor/config.hpp"
#include "rotor/graph.hpp"

namespace rotor {

struct CoverReport {
  std::optional<std::uint64_t> t_vertex;  // min t with {X_1..X_t} = V
  std::optional<std::uint64_t> t_edge;    // min t with {(X_s, X_{s+1}) : s <= t} = E
  std::uint64_t steps = 0;
  bool incomplete() const noexcept { return !t_vertex || !t_edge; }
};

/// Runs until every directed edge (parallel edges counted separately) is used,
/// or the step budget is spent.
CoverReport cover_times(const GraphModel& g, const ConfigProvider& config, Vertex origin, std::uint64_t budget);

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HittingColumn {
  std::int64_t target = 0;
  std::vector<double> h;  // h[u] = H(u, target)
  double residual = 0;    // max_u |H(u) - 1 - mean_w H(w)| over u != target
};

/// Dense LU below `dense_limit` vertices, sparse iterative solve above.
HittingColumn hitting_times(const GraphModel& g, std::int64_t target, std::size_t dense_limit = 2000);

struct KReport {
  double k = 0;
  std::int64_t argmax_target = 0;
  double max_residual = 0;
};

/// K = max_v [ max_u H(u,v) + (#E + sum_{(i,j) in E} |H(i,v) - H(j,v) - 1|) / 2 ].
/// `targets` restricts v (all vertices when empty); pass one target for
/// vertex-transitive graphs.
KReport compute_K(const GraphModel& g, const std::vector<std::int64_t>& targets = {});

/// The K term for a single solved column.
double k_term(const GraphModel& g, const HittingColumn& col);

/// H(u, (0,0)) on the thick cycle by lumping vertices (x, y != 0) together.
std::vector<double> thick_cycle_hitting_lumped(int length, int thickness);

struct BatteryInstance {
  std::string name;
  GraphModel graph;
  ConfigProvider config;
  Vertex origin;
};

/// Cover-time battery: random bidirected and directed Eulerian graphs, cycles,
/// thick cycles and complete graphs (at most 60 vertices), with shuffled
/// out-edge orders and uniform or tree-to-origin configurations.
std::vector<BatteryInstance> cover_battery(std::uint64_t seed, int count);

}  // namespace rotor
