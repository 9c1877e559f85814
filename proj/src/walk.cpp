#include "rotor/walk.hpp"

#include <algorithm>
#include <sstream>

namespace rotor {

RotorWalk::RotorWalk(const GraphModel& g, const ConfigProvider& config, Vertex origin)
    : g_(&g), config_(&config), origin_(origin), origin_deg_(g.outdeg(origin)), store_(g), position_(origin) {
  current_ = &store_.at(origin);
}

bool RotorWalk::step() {
  Cell& here = *current_;
  const int deg = g_->outdeg(position_);
  int slot = here.rotor;
  if (slot < 0) slot = config_->initial_slot(*g_, position_, arrived_from_);
  slot = slot + 1 == deg ? 0 : slot + 1;
  const Vertex next = g_->head(position_, slot);
  if (!g_->contains(next)) {
    std::ostringstream os;
    os << "walk left the world limit at time " << time_ << " stepping from " << position_ << " to " << next;
    throw WalkAborted(os.str(), time_, position_);
  }

  if (here.mark != current_excursion_) {
    here.mark = current_excursion_;
    here.mark_departures = here.departures;
    touched_.push_back(position_);
  }
  here.rotor = slot;
  ++here.departures;

  arrived_from_ = position_;
  position_ = next;
  ++time_;
  Cell& there = store_.at(next);
  if (there.arrivals++ == 0) ++range_size_;
  current_ = &there;

  if (next == origin_ &&
      there.arrivals == static_cast<std::uint64_t>(current_excursion_) * static_cast<std::uint64_t>(origin_deg_)) {
    finished_touched_.swap(touched_);
    touched_.clear();
    finished_end_ = time_;
    ++current_excursion_;
    return true;
  }
  return false;
}

std::uint64_t RotorWalk::departures(Vertex v) const {
  const Cell* c = store_.find(v);
  return c ? c->departures : 0;
}

std::uint64_t RotorWalk::arrivals(Vertex v) const {
  const Cell* c = store_.find(v);
  return c ? c->arrivals : 0;
}

std::optional<int> RotorWalk::rotor(Vertex v) const {
  const Cell* c = store_.find(v);
  if (c == nullptr || c->rotor < 0) return std::nullopt;
  return c->rotor;
}

ExcursionRecord RotorWalk::last_excursion() const {
  ExcursionRecord rec;
  rec.index = current_excursion_ - 1;
  rec.end_time = finished_end_;
  rec.visits.reserve(finished_touched_.size());
  for (const auto& v : finished_touched_) {
    const Cell* c = store_.find(v);
    rec.visits.emplace_back(v, c->departures - c->mark_departures);
  }
  std::sort(rec.visits.begin(), rec.visits.end());
  return rec;
}

std::vector<Vertex> RotorWalk::range() const {
  std::vector<Vertex> out;
  out.reserve(range_size_);
  store_.for_each([&](Vertex v, const Cell& c) {
    if (c.arrivals > 0) out.push_back(v);
  });
  std::sort(out.begin(), out.end());
  return out;
}

ExcursionLog run_excursions(const GraphModel& g, const ConfigProvider& config, Vertex origin, std::uint64_t n_max,
                            std::uint64_t step_budget,
                            const std::function<void(const RotorWalk&, const ExcursionRecord&)>& on_excursion,
                            bool keep_records) {
  if (n_max < 1) throw std::invalid_argument("run_excursions: n_max must be >= 1");
  if (step_budget < 1) throw std::invalid_argument("run_excursions: step budget must be >= 1");
  ExcursionLog log;
  RotorWalk walk(g, config, origin);
  std::uint64_t done = 0;
  while (done < n_max && walk.time() < step_budget) {
    if (walk.step()) {
      ++done;
      if (keep_records || on_excursion) {
        auto rec = walk.last_excursion();
        if (on_excursion) on_excursion(walk, rec);
        if (keep_records) log.excursions.push_back(std::move(rec));
      }
    }
  }
  log.incomplete = done < n_max;
  log.steps = walk.time();
  return log;
}

Trajectory run_steps(const GraphModel& g, const ConfigProvider& config, Vertex origin, std::uint64_t t,
                     std::span<const std::uint64_t> checkpoints, bool capture_range) {
  std::vector<std::uint64_t> marks;
  for (auto c : checkpoints) {
    if (c <= t) marks.push_back(c);
  }
  marks.push_back(t);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  Trajectory traj;
  RotorWalk walk(g, config, origin);
  for (auto mark : marks) {
    while (walk.time() < mark) walk.step();
    Checkpoint cp;
    cp.time = walk.time();
    cp.origin_departures = walk.departures(origin);
    cp.origin_returns = walk.origin_returns();
    cp.range_size = walk.range_size();
    cp.completed_excursions = walk.completed_excursions();
    if (capture_range) cp.range = walk.range();
    traj.checkpoints.push_back(std::move(cp));
  }
  return traj;
}

}  // namespace rotor
