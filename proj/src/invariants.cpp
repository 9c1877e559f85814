#include "rotor/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace rotor {

namespace {
constexpr std::size_t kKeptMessages = 8;
}

void InvariantTally::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (messages.size() < kKeptMessages) messages.push_back(what);
}

void InvariantTally::merge(const InvariantTally& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& m : other.messages) {
    if (messages.size() < kKeptMessages) messages.push_back(m);
  }
}

ExcursionMonitor::ExcursionMonitor(const GraphModel& g, Vertex origin)
    : g_(&g), balls_(g, origin), previous_{origin} {}

void ExcursionMonitor::on_excursion(const RotorWalk& walk, const ExcursionRecord& rec) {
  const auto n = rec.index;
  std::unordered_map<Vertex, std::uint64_t, VertexHash> e;
  e.reserve(rec.visits.size());
  for (const auto& [x, count] : rec.visits) e.emplace(x, count);

  auto where = [&](const char* rule, Vertex x) {
    std::ostringstream os;
    os << rule << " fails at excursion " << n << ", vertex " << x;
    return os.str();
  };

  // e_n(x) <= deg(x)
  bool bounded = true;
  Vertex bad{};
  for (const auto& [x, count] : rec.visits) {
    if (count > static_cast<std::uint64_t>(g_->outdeg(x))) {
      bounded = false;
      bad = x;
      break;
    }
  }
  tally_.record(bounded, where("e_n(x) <= deg(x)", bad));

  // e_n(x) = deg(x) on A_{n-1}, and A_n contains A_{n-1} together with its out-neighbours.
  bool full = true;
  bool grows = true;
  Vertex bad_full{}, bad_grow{};
  for (const auto& x : previous_) {
    auto it = e.find(x);
    if (full && (it == e.end() || it->second != static_cast<std::uint64_t>(g_->outdeg(x)))) {
      full = false;
      bad_full = x;
    }
    if (grows) {
      const int d = g_->outdeg(x);
      for (int s = 0; s < d; ++s) {
        const Vertex y = g_->head(x, s);
        if (!e.contains(y)) {
          grows = false;
          bad_grow = y;
          break;
        }
      }
    }
  }
  tally_.record(full, where("e_n(x) = deg(x) on A_{n-1}", bad_full));
  tally_.record(grows, where("A_n contains A_{n-1} and its boundary", bad_grow));

  // B(o,n) within A_n
  bool covers = true;
  Vertex bad_ball{};
  const int radius = static_cast<int>(std::min<std::uint64_t>(n, static_cast<std::uint64_t>(1) << 30));
  for (const auto& x : balls_.ball(radius)) {
    if (!e.contains(x)) {
      covers = false;
      bad_ball = x;
      break;
    }
  }
  tally_.record(covers, where("B(o,n) within A_n", bad_ball));

  // Rotors settle: for x first seen in A_m, rho_{T(N)}(x) = rho_{T(m)}(x) for all N >= m.
  bool settled = true;
  Vertex bad_rotor{};
  for (const auto& [x, slot] : settled_rotor_) {
    if (walk.rotor(x) != slot) {
      settled = false;
      bad_rotor = x;
      break;
    }
  }
  tally_.record(settled, where("rotor on A_m unchanged at T(N)", bad_rotor));
  for (const auto& [x, count] : rec.visits) {
    if (!settled_rotor_.contains(x)) settled_rotor_.emplace(x, walk.rotor(x).value_or(-1));
  }

  previous_.clear();
  for (const auto& [x, count] : rec.visits) previous_.push_back(x);
}

void check_range_bounds(const RotorWalk& walk, BallGrowth& balls, InvariantTally& tally, bool check_all_vertices) {
  const std::uint64_t t = walk.time();
  const std::uint64_t deg_o = static_cast<std::uint64_t>(walk.origin_degree());
  const std::uint64_t returns = walk.origin_returns();
  const auto winv = static_cast<std::uint64_t>(balls.w_inverse(t));
  const auto delta = static_cast<std::uint64_t>(balls.max_degree(t));

  std::ostringstream os;
  os << "at t=" << t << ": returns(o)=" << returns << ", W^-1(t)=" << winv << ", #R_t=" << walk.range_size();
  tally.record(returns < deg_o * winv, "returns(o) < deg(o) W^-1(t) fails " + os.str());

  if (check_all_vertices) {
    bool ok = true;
    Vertex bad{};
    const auto& g = walk.graph();
    walk.for_each_cell([&](Vertex x, const Cell& c) {
      if (ok && c.arrivals > returns + static_cast<std::uint64_t>(g.outdeg(x))) {
        ok = false;
        bad = x;
      }
    });
    std::ostringstream vs;
    vs << "visits(x) <= returns(o) + deg(x) fails at " << bad << ' ' << os.str();
    tally.record(ok, vs.str());
  }

  const std::uint64_t denom = deg_o * winv + delta - 1;
  tally.record(walk.range_size() * denom >= t, "#R_t >= t/(deg(o)W^-1(t)+Delta-1) fails " + os.str());
}

void check_transient_bounds(const RotorWalk& walk, BallGrowth& balls, InvariantTally& tally) {
  const std::uint64_t t = walk.time();
  const auto delta = static_cast<std::uint64_t>(balls.max_degree(t));
  std::ostringstream os;
  os << "at t=" << t << ": returns(o)=" << walk.origin_returns() << ", #R_t=" << walk.range_size();
  tally.record(walk.origin_returns() < static_cast<std::uint64_t>(walk.origin_degree()),
               "returns(o) < deg(o) fails " + os.str());
  tally.record(walk.range_size() * delta >= t, "#R_t >= t/Delta fails " + os.str());
}

}  // namespace rotor
