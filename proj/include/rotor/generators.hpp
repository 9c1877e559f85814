#pragma once

// Random finite Eulerian digraphs for property tests and the cover battery.

#include <cstdint>
#include <vector>

#include "rotor/graph.hpp"

namespace rotor {

/// Connected bidirected graph on n vertices: a random spanning tree plus
/// `extra` random additional undirected edges (parallel edges allowed, no loops).
GraphModel random_bidirected(int n, int extra, std::uint64_t seed);

/// Connected directed Eulerian graph: a random Hamiltonian cycle plus
/// `cycles` further random directed cycles of length 2..max_len.
GraphModel random_directed_eulerian(int n, int cycles, int max_len, std::uint64_t seed);

/// Same graph with every out-edge list permuted at random.
GraphModel shuffle_out_orders(const GraphModel& g, std::uint64_t seed);

/// Out-lists of a finite graph, in slot order.
std::vector<std::vector<std::int64_t>> out_lists(const GraphModel& g);

/// True when the graph is symmetric (each u->v matched by some v->u, with multiplicity).
bool is_bidirected(const GraphModel& g);

}  // namespace rotor
