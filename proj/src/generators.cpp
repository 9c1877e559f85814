#include "rotor/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace rotor {

std::vector<std::vector<std::int64_t>> out_lists(const GraphModel& g) {
  if (!g.is_finite()) throw GraphError("out_lists() needs a finite graph");
  std::vector<std::vector<std::int64_t>> lists(g.vertex_count());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    auto out = g.finite_out(static_cast<std::int64_t>(v));
    lists[v].assign(out.begin(), out.end());
  }
  return lists;
}

GraphModel random_bidirected(int n, int extra, std::uint64_t seed) {
  if (n < 2) throw GraphError("random_bidirected needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    edges.emplace_back(a, b);
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  for (auto& [a, b] : edges) {
    a = label[static_cast<std::size_t>(a)];
    b = label[static_cast<std::size_t>(b)];
  }
  return shuffle_out_orders(bidirected(static_cast<std::size_t>(n), edges), rng());
}

GraphModel random_directed_eulerian(int n, int cycles, int max_len, std::uint64_t seed) {
  if (n < 2) throw GraphError("random_directed_eulerian needs n >= 2");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::int64_t>> lists(static_cast<std::size_t>(n));
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i) {
    lists[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].push_back(
        perm[static_cast<std::size_t>((i + 1) % n)]);
  }
  const int top = std::clamp(max_len, 2, n);
  std::uniform_int_distribution<int> len_dist(2, top);
  for (int c = 0; c < cycles; ++c) {
    const int len = len_dist(rng);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < len; ++i) {
      lists[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].push_back(
          perm[static_cast<std::size_t>((i + 1) % len)]);
    }
  }
  return shuffle_out_orders(GraphModel::finite(std::move(lists)), rng());
}

GraphModel shuffle_out_orders(const GraphModel& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto lists = out_lists(g);
  for (auto& l : lists) std::shuffle(l.begin(), l.end(), rng);
  return GraphModel::finite(std::move(lists));
}

bool is_bidirected(const GraphModel& g) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> balance;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  for (std::int64_t u = 0; u < n; ++u) {
    for (auto w : g.finite_out(u)) {
      if (u == w) continue;
      const auto key = std::minmax(u, w);
      balance[{key.first, key.second}] += u < w ? 1 : -1;
    }
  }
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace rotor
