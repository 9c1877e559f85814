#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rotor/vertex.hpp"

namespace rotor {

enum class GraphKind { Finite, Z2, Line, Comb, Manhattan, FLattice };

std::string_view to_string(GraphKind kind);
GraphKind graph_kind_from_string(std::string_view name);

/// Thrown when a lattice coordinate leaves the configured world limit.
class WorldLimitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DirectedEdge {
  Vertex tail;
  Vertex head;
  int slot = 0;

  friend constexpr auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

inline constexpr std::int64_t kDefaultWorldLimit = (std::int64_t{1} << 31) - 2;

/// Finite Eulerian digraph or one of the infinite periodic lattices.
///
/// Out-edge order is the rotor mechanism: the walker leaving v after
/// slot k uses slot (k + 1) mod outdeg(v).
///   Z2, comb axis:    N, E, S, W
///   comb teeth:       up, down
///   Line:             right, left
///   Manhattan, F:     the two lattice directions, ordered E < N < S < W
/// Immutable after construction.
class GraphModel {
 public:
  static GraphModel lattice(GraphKind kind, std::int64_t world_limit = kDefaultWorldLimit);

  /// Builds a finite digraph from ordered out-edge lists. Throws GraphError
  /// if a head is out of range or the graph is not Eulerian and connected.
  static GraphModel finite(std::vector<std::vector<std::int64_t>> out_lists);

  /// Same as finite(), without the Eulerian/connectivity check.
  static GraphModel finite_unchecked(std::vector<std::vector<std::int64_t>> out_lists);

  /// Text format: "n m" then m lines "tail head"; out-edge order is file order.
  static GraphModel load(std::istream& in);

  GraphKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == GraphKind::Finite; }
  std::int64_t world_limit() const noexcept { return world_limit_; }
  std::size_t vertex_count() const;
  std::size_t edge_count() const;  // directed edges; finite graphs only

  bool contains(Vertex v) const noexcept;
  void require(Vertex v) const;

  int outdeg(Vertex v) const;
  int indeg(Vertex v) const;
  Vertex head(Vertex v, int slot) const;
  std::vector<DirectedEdge> out_edges(Vertex v) const;
  /// Tails of edges into v, with multiplicity.
  std::vector<Vertex> in_neighbors(Vertex v) const;
  /// First slot at v whose head is w, or -1.
  int slot_toward(Vertex v, Vertex w) const;

  /// Direction of slot at a lattice vertex (not meaningful for Finite or Line).
  Direction lattice_direction(Vertex v, int slot) const;

  std::span<const std::int64_t> finite_out(std::int64_t index) const;

 private:
  GraphModel() = default;

  GraphKind kind_ = GraphKind::Z2;
  std::int64_t world_limit_ = kDefaultWorldLimit;
  std::vector<std::int64_t> offsets_;
  std::vector<std::int64_t> targets_;
  std::vector<std::int64_t> in_offsets_;
  std::vector<std::int64_t> in_sources_;
};

struct EulerianReport {
  bool ok = true;
  bool connected = true;
  std::vector<std::string> violations;
};

EulerianReport validate_eulerian(const GraphModel& g);

/// Bidirected graph from an undirected edge list (each edge becomes two arcs).
GraphModel bidirected(std::size_t n, std::span<const std::pair<std::int64_t, std::int64_t>> edges);

GraphModel build_thick_cycle(int length, int thickness);
GraphModel build_cycle(int n);
GraphModel build_path(int n);
GraphModel build_complete(int n);
GraphModel build_star(int leaves);

/// Index of (x, y) in build_thick_cycle's vertex numbering (0-based coordinates).
constexpr std::int64_t thick_cycle_index(int thickness, int x, int y) {
  return static_cast<std::int64_t>(x) * thickness + y;
}

}  // namespace rotor
