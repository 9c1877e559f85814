#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rotor/graph.hpp"

namespace rotor {

/// B(o,r), the number v(r) of directed edges with tail or head in B(o,r),
/// and W(r) = v(0) + ... + v(r-1).
struct BallProfile {
  int radius = 0;
  std::vector<Vertex> vertices;
  std::uint64_t incident_edges = 0;
  std::uint64_t cumulative = 0;
};

/// Incrementally grown directed balls around an origin.
///
/// Layers are added lazily; a finite graph stops growing once the ball
/// covers everything reachable, after which v(r) stays constant.
class BallGrowth {
 public:
  BallGrowth(const GraphModel& g, Vertex origin);

  Vertex origin() const noexcept { return origin_; }
  void extend_to(int r);
  int grown_radius() const noexcept { return static_cast<int>(layer_end_.size()) - 1; }
  bool saturated() const noexcept { return saturated_; }

  std::size_t size(int r);
  std::uint64_t incident_edges(int r);
  std::uint64_t cumulative(int r);  // W(r)

  /// min { r : W(r) > t }.
  int w_inverse(std::uint64_t t);

  /// Directed distance from the origin if it is at most `r`, else -1.
  int distance(Vertex v, int r);
  bool in_ball(Vertex v, int r) { return distance(v, r) >= 0; }

  std::vector<Vertex> ball(int r);
  BallProfile profile(int r);

  /// Maximum out-degree over B(o, r).
  int max_degree(std::uint64_t r);

 private:
  void add_layer();
  int effective(int r);

  const GraphModel* g_;
  Vertex origin_;
  std::vector<Vertex> order_;             // BFS order
  std::vector<std::size_t> layer_end_;    // order_[0, layer_end_[n]) = B(o,n)
  std::vector<std::uint64_t> v_;          // v(n)
  std::vector<int> max_deg_;              // max outdeg over B(o,n)
  std::unordered_map<Vertex, int, VertexHash> dist_;
  std::uint64_t outdeg_sum_ = 0;
  std::uint64_t inbound_ = 0;
  bool saturated_ = false;
};

BallProfile ball(const GraphModel& g, Vertex o, int r);
int w_inverse(const GraphModel& g, Vertex o, std::uint64_t t);

/// Longest directed distance over ordered pairs; throws GraphError if some
/// vertex cannot reach another.
int diameter(const GraphModel& g);

/// Longest directed distance from v; throws GraphError if some vertex is unreachable.
int eccentricity(const GraphModel& g, Vertex v);

}  // namespace rotor
