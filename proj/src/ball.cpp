#include "rotor/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

namespace rotor {

BallGrowth::BallGrowth(const GraphModel& g, Vertex origin) : g_(&g), origin_(origin) {
  g.require(origin);
  dist_.emplace(origin, 0);
  order_.push_back(origin);
  layer_end_.push_back(1);
  outdeg_sum_ = static_cast<std::uint64_t>(g.outdeg(origin));
  for (const auto& tail : g.in_neighbors(origin)) {
    if (tail != origin) ++inbound_;
  }
  v_.push_back(outdeg_sum_ + inbound_);
  max_deg_.push_back(g.outdeg(origin));
}

void BallGrowth::add_layer() {
  const int n = grown_radius();
  if (n >= g_->world_limit()) throw WorldLimitError("ball radius exceeds the world limit");
  const std::size_t begin = n == 0 ? 0 : layer_end_[static_cast<std::size_t>(n) - 1];
  const std::size_t end = layer_end_.back();
  int max_deg = max_deg_.back();
  for (std::size_t i = begin; i < end; ++i) {
    const Vertex x = order_[i];
    const int d = g_->outdeg(x);
    for (int s = 0; s < d; ++s) {
      const Vertex z = g_->head(x, s);
      if (dist_.contains(z)) continue;
      g_->require(z);
      // Out-edges of z into the old ball stop counting as inbound edges;
      // in-edges of z from outside start counting.
      const int dz = g_->outdeg(z);
      for (int sz = 0; sz < dz; ++sz) {
        const Vertex h = g_->head(z, sz);
        if (h != z && dist_.contains(h)) --inbound_;
      }
      for (const auto& tail : g_->in_neighbors(z)) {
        if (tail != z && !dist_.contains(tail)) ++inbound_;
      }
      dist_.emplace(z, n + 1);
      order_.push_back(z);
      outdeg_sum_ += static_cast<std::uint64_t>(dz);
      max_deg = std::max(max_deg, dz);
    }
  }
  if (order_.size() == end) saturated_ = true;
  layer_end_.push_back(order_.size());
  v_.push_back(outdeg_sum_ + inbound_);
  max_deg_.push_back(max_deg);
}

void BallGrowth::extend_to(int r) {
  if (r < 0) throw std::out_of_range("negative radius");
  while (grown_radius() < r && !saturated_) add_layer();
}

int BallGrowth::effective(int r) {
  extend_to(r);
  return std::min(r, grown_radius());
}

std::size_t BallGrowth::size(int r) { return layer_end_[static_cast<std::size_t>(effective(r))]; }

std::uint64_t BallGrowth::incident_edges(int r) { return v_[static_cast<std::size_t>(effective(r))]; }

std::uint64_t BallGrowth::cumulative(int r) {
  if (r < 0) throw std::out_of_range("negative radius");
  std::uint64_t w = 0;
  for (int n = 0; n < r; ++n) {
    if (!saturated_ || n <= grown_radius()) {
      w += incident_edges(n);
    } else {
      w += v_.back() * static_cast<std::uint64_t>(r - n);
      break;
    }
  }
  return w;
}

int BallGrowth::w_inverse(std::uint64_t t) {
  std::uint64_t w = 0;
  for (int r = 0;; ++r) {
    if (w > t) return r;
    const std::uint64_t vr = incident_edges(r);
    if (saturated_ && r >= grown_radius()) {
      // v is constant from here on.
      const std::uint64_t remaining = t - w;
      return r + 1 + static_cast<int>(remaining / vr);
    }
    w += vr;
  }
}

int BallGrowth::distance(Vertex v, int r) {
  extend_to(r);
  auto it = dist_.find(v);
  if (it == dist_.end() || it->second > r) return -1;
  return it->second;
}

std::vector<Vertex> BallGrowth::ball(int r) {
  const auto n = size(r);
  return {order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(n)};
}

BallProfile BallGrowth::profile(int r) {
  BallProfile p;
  p.radius = r;
  p.vertices = ball(r);
  p.incident_edges = incident_edges(r);
  p.cumulative = cumulative(r);
  return p;
}

int BallGrowth::max_degree(std::uint64_t r) {
  if (!g_->is_finite()) {
    // Lattices are periodic, so the maximum is reached within a few layers.
    switch (g_->kind()) {
      case GraphKind::Comb:
        return static_cast<std::uint64_t>(std::abs(origin_.y)) <= r ? 4 : 2;
      case GraphKind::Z2:
        return 4;
      default:
        return 2;
    }
  }
  const int capped = static_cast<int>(std::min<std::uint64_t>(r, static_cast<std::uint64_t>(g_->vertex_count())));
  return max_deg_[static_cast<std::size_t>(effective(capped))];
}

BallProfile ball(const GraphModel& g, Vertex o, int r) {
  BallGrowth growth(g, o);
  return growth.profile(r);
}

int w_inverse(const GraphModel& g, Vertex o, std::uint64_t t) {
  BallGrowth growth(g, o);
  return growth.w_inverse(t);
}

int eccentricity(const GraphModel& g, Vertex v) {
  if (!g.is_finite()) throw GraphError("eccentricity() needs a finite graph");
  const auto n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<std::int64_t> queue;
  queue.reserve(n);
  dist[static_cast<std::size_t>(v.x)] = 0;
  queue.push_back(v.x);
  int far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    const int dx = dist[static_cast<std::size_t>(x)];
    far = std::max(far, dx);
    for (auto w : g.finite_out(x)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dx + 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != n) {
    throw GraphError("graph is not strongly connected: vertex " + std::to_string(v.x) + " reaches " +
                     std::to_string(queue.size()) + " of " + std::to_string(n) + " vertices");
  }
  return far;
}

int diameter(const GraphModel& g) {
  if (!g.is_finite()) throw GraphError("diameter() needs a finite graph");
  int d = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    d = std::max(d, eccentricity(g, finite_vertex(static_cast<std::int64_t>(v))));
  }
  return d;
}

}  // namespace rotor
