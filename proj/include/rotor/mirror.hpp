#pragma once

// Critical bond percolation on the half-dual lattice L, the mirror fields it
// induces on the Manhattan and F-lattices, the first-glance mirror walk, and
// the rotor configuration coupled to it.
//
// Geometry: an L-point (a, b) stands for (a + 1/2, b + 1/2) with a + b odd.
// Every vertex v of Z^2 is the midpoint of exactly one L-edge e_v:
//   x + y odd  -> "/"  from (x-1, y-1) to (x, y)
//   x + y even -> "\"  from (x-1, y)   to (x, y-1)
// so the edge status can be keyed by v itself.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rotor/config.hpp"
#include "rotor/graph.hpp"

namespace rotor {

class MirrorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend constexpr auto operator<=>(const LPoint&, const LPoint&) = default;
};

enum class Diagonal : std::uint8_t { Slash, Backslash };  // "/" and "\"
enum class MirrorKind : std::uint8_t { None, Parallel, Perpendicular };

Diagonal ev_orientation(Vertex v);
std::pair<LPoint, LPoint> ev_endpoints(Vertex v);

class PercolationField {
 public:
  static PercolationField fair(std::uint64_t seed);
  static PercolationField constant(bool open);

  /// Forces the status of e_v.
  void plant(Vertex v, bool open);
  bool open(Vertex v) const;
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  PercolationField() = default;
  std::uint64_t seed_ = 0;
  std::optional<bool> constant_;
  std::unordered_map<Vertex, bool, VertexHash> planted_;
};

MirrorKind mirror_at(const PercolationField& field, GraphKind kind, Vertex v);
std::optional<Diagonal> mirror_diagonal(const PercolationField& field, GraphKind kind, Vertex v);

/// Out-slot taken by the very first step from the origin.
int mirror_start_slot(const PercolationField& field, Vertex origin);

/// Rotor configuration whose walk coincides with the first-glance mirror walk.
ConfigProvider coupled_rotor_config(std::shared_ptr<const PercolationField> field, GraphKind kind,
                                    Vertex origin = {0, 0});

struct MirrorTrajectory {
  std::vector<Vertex> path;  // X_0 .. X_t
  std::unordered_map<Vertex, Vertex, VertexHash> assigned;  // rho(v) = (v, w): first exit head
};

/// Light-ray walk: reflect (or pass) on first visits, rotor rules afterwards.
/// Throws MirrorError if a step leaves the directed lattice.
MirrorTrajectory first_glance_mirror_walk(const PercolationField& field, const GraphModel& g, Vertex origin,
                                          std::uint64_t t);

/// Closed L-edges with both endpoints in the annulus l + 1/2 <= |p|_inf <= 3l - 1/2.
/// True iff they contain a cycle winding around the origin.
bool find_surrounding_cycle(const PercolationField& field, int ell);

/// Reference answer by flood fill on a quarter-unit raster: true iff closed
/// annulus edges separate the inner square from the outer one.
bool surrounding_cycle_by_separation(const PercolationField& field, int ell);

struct ReturnCount {
  std::uint64_t seed = 0;
  GraphKind kind = GraphKind::Manhattan;
  std::vector<std::uint64_t> times;
  std::vector<std::uint64_t> returns;   // visits to o at times 1..t per checkpoint
  std::vector<std::uint64_t> odometer;  // u_t(o): visits at times 0..t-1
  std::vector<std::uint64_t> range_sizes;
  bool aborted = false;
};

/// Uniform rotor walk (driven by the fair field of `seed`) with checkpoints.
ReturnCount return_count_experiment(GraphKind kind, std::uint64_t seed, std::span<const std::uint64_t> times,
                                    std::int64_t world_limit = kDefaultWorldLimit);

struct CycleLemmaRun {
  bool cycle = false;
  bool exited = false;  // reached |v|_inf > 3l within budget
  std::uint64_t returns_before_exit = 0;
  std::uint64_t steps = 0;
  bool ok() const noexcept { return !cycle || !exited || returns_before_exit >= 2; }
};

CycleLemmaRun check_cycle_lemma(GraphKind kind, std::uint64_t seed, int ell, std::uint64_t budget);

}  // namespace rotor
