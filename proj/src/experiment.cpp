#include "rotor/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rotor/ball.hpp"
#include "rotor/comb.hpp"
#include "rotor/config.hpp"
#include "rotor/cover.hpp"
#include "rotor/invariants.hpp"
#include "rotor/mirror.hpp"
#include "rotor/report.hpp"
#include "rotor/walk.hpp"

namespace rotor {

using json = nlohmann::json;

namespace {

// ---- parsing helpers ----

const std::set<std::string> kExperiments{"walk", "comb-shape", "mirror-returns", "cycle-lemma", "cover"};

template <class T>
T get_field(const json& j, const std::string& key, const std::string& path) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SpecError(path, e.what());
  }
}

std::uint64_t get_u64(const json& j, const std::string& key, const std::string& path) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw SpecError(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> get_u64_list(const json& j, const std::string& key, const std::string& path) {
  const auto& v = j.at(key);
  if (!v.is_array()) throw SpecError(path, "expected an array of non-negative integers");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || v[i].get<std::int64_t>() < 0) {
      throw SpecError(path + "[" + std::to_string(i) + "]", "expected a non-negative integer");
    }
    out.push_back(v[i].get<std::uint64_t>());
  }
  return out;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw SpecError(prefix + key, "unknown field");
  }
}

std::vector<std::uint64_t> parse_seeds(const json& v) {
  if (v.is_array()) return get_u64_list(json{{"seeds", v}}, "seeds", "seeds");
  if (v.is_object()) {
    reject_unknown(v, {"from", "to"}, "seeds.");
    if (!v.contains("from") || !v.contains("to")) throw SpecError("seeds", "range needs 'from' and 'to'");
    const auto from = get_u64(v, "from", "seeds.from");
    const auto to = get_u64(v, "to", "seeds.to");
    if (to < from) throw SpecError("seeds", "'to' is smaller than 'from'");
    if (to - from >= 10'000'000) throw SpecError("seeds", "range too large");
    std::vector<std::uint64_t> out;
    for (auto s = from; s <= to; ++s) out.push_back(s);
    return out;
  }
  throw SpecError("seeds", "expected an array or {\"from\": a, \"to\": b}");
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---- building graphs and configurations ----

GraphModel build_graph(const GraphSelector& sel, std::int64_t world_limit) {
  if (sel.kind != "finite") {
    try {
      return GraphModel::lattice(graph_kind_from_string(sel.kind), world_limit);
    } catch (const GraphError& e) {
      throw SpecError("graph.kind", e.what());
    }
  }
  try {
    if (sel.builder == "cycle") return build_cycle(sel.n);
    if (sel.builder == "path") return build_path(sel.n);
    if (sel.builder == "complete") return build_complete(sel.n);
    if (sel.builder == "star") return build_star(sel.n);
    if (sel.builder == "thick-cycle") return build_thick_cycle(sel.length, sel.thickness);
    if (sel.builder == "file") {
      std::ifstream in(sel.file);
      if (!in) throw SpecError("graph.file", "cannot open '" + sel.file.string() + "'");
      return GraphModel::load(in);
    }
  } catch (const GraphError& e) {
    throw SpecError("graph", e.what());
  }
  throw SpecError("graph.builder", "unknown builder '" + sel.builder + "'");
}

ConfigProvider make_config(const ExperimentSpec& spec, const GraphModel& g, std::uint64_t seed) {
  const auto& kind = spec.config.kind;
  try {
    if (kind == "uniform") return ConfigProvider::uniform(seed);
    if (kind == "diamond") {
      if (g.kind() != GraphKind::Z2) throw SpecError("config.kind", "the diamond configuration is defined on z2 only");
      return diamond_config_z2(spec.origin);
    }
    if (kind == "path-to-origin") return path_to_origin_config(g, spec.origin, seed);
    if (kind == "tree-to-origin") return tree_to_origin_config(g, spec.origin);
    if (kind == "explicit") {
      std::ifstream in(spec.config.file);
      if (!in) throw SpecError("config.file", "cannot open '" + spec.config.file.string() + "'");
      return ConfigProvider::load_explicit(in);
    }
  } catch (const ConfigError& e) {
    throw SpecError("config", e.what());
  }
  throw SpecError("config.kind", "unknown configuration kind '" + kind + "'");
}

// ---- tables ----

struct Table {
  std::vector<std::string> columns;
  std::vector<json> rows;  // arrays aligned with columns
};

std::string format_cell(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_cell(row[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t, const ExperimentSpec& spec, const RunResult& result) {
  json doc;
  doc["metadata"] = {{"experiment", spec.experiment},
                     {"spec_hash", spec_hash(spec)},
                     {"version", kToolVersion},
                     {"violations", result.violations}};
  doc["columns"] = t.columns;
  json rows = json::array();
  for (const auto& r : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void note_violation(RunResult& result, const std::string& what) {
  if (result.violations.size() < 50) result.violations.push_back(what);
  result.exit_code = 2;
}

// ---- experiments ----

Table run_walk(const ExperimentSpec& spec, RunResult& result) {
  Table t{{"seed", "t", "origin_returns", "origin_departures", "range_size", "range_ratio", "excursions",
           "w_inverse", "invariant_failures", "aborted"},
          {}};
  const auto g = build_graph(spec.graph, spec.world_limit);
  if (!g.contains(spec.origin)) throw SpecError("origin", "origin is not a vertex of the graph");
  std::vector<std::uint64_t> marks;
  for (auto c : spec.checkpoints) {
    if (c >= 1 && c <= spec.steps) marks.push_back(c);
  }
  marks.push_back(spec.steps);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  for (auto seed : spec.seeds) {
    const auto cfg = make_config(spec, g, seed);
    RotorWalk walk(g, cfg, spec.origin);
    ExcursionMonitor monitor(g, spec.origin);
    BallGrowth balls(g, spec.origin);
    InvariantTally tally;
    bool aborted = false;
    std::size_t next = 0;
    auto emit = [&](std::uint64_t time) {
      const double ratio = time == 0 ? 0.0
                                     : static_cast<double>(walk.range_size()) /
                                           std::pow(static_cast<double>(time), 2.0 / 3.0);
      t.rows.push_back(json::array({seed, time, walk.origin_returns(), walk.departures(spec.origin),
                                    walk.range_size(), ratio, walk.completed_excursions(),
                                    balls.w_inverse(time), tally.failures + monitor.tally().failures, aborted}));
    };
    try {
      while (next < marks.size()) {
        if (walk.time() == marks[next]) {
          if (walk.time() > 0) check_range_bounds(walk, balls, tally, false);
          emit(walk.time());
          ++next;
          continue;
        }
        if (walk.step()) monitor.on_excursion(walk, walk.last_excursion());
      }
    } catch (const WalkAborted& e) {
      aborted = true;
      emit(walk.time());
    }
    for (const auto& m : monitor.tally().messages) note_violation(result, "seed " + std::to_string(seed) + ": " + m);
    for (const auto& m : tally.messages) note_violation(result, "seed " + std::to_string(seed) + ": " + m);
    if (!monitor.tally().ok() || !tally.ok()) result.exit_code = 2;
  }
  return t;
}

Table run_comb(const ExperimentSpec& spec, RunResult& result) {
  Table t{{"seed", "n", "c", "t", "inside_ok", "outside_ok", "range_size", "range_ratio", "zigzag_ok",
           "turning_points", "sandwich_lower_failures", "sandwich_upper_failures"},
          {}};
  for (auto seed : spec.seeds) {
    CombRun run;
    try {
      run = run_comb_shape(seed, spec.n, spec.c, spec.multiplier);
    } catch (const std::invalid_argument& e) {
      throw SpecError("n", e.what());
    }
    t.rows.push_back(json::array({seed, run.n, run.c, run.t, run.verdict.inside_ok, run.verdict.outside_ok,
                                  run.range_size, run.range_ratio, run.zigzag_ok, run.turning_points,
                                  run.sandwich.lower_failures, run.sandwich.upper_failures}));
    if (!run.zigzag_ok) note_violation(result, "seed " + std::to_string(seed) + ": axis zigzag mismatch");
  }
  return t;
}

GraphKind mirror_kind(const std::string& name) {
  if (name == "manhattan") return GraphKind::Manhattan;
  if (name == "flattice") return GraphKind::FLattice;
  throw SpecError("lattice", "expected 'manhattan' or 'flattice', got '" + name + "'");
}

Table run_mirror_returns(const ExperimentSpec& spec, RunResult&) {
  Table t{{"seed", "lattice", "t", "u_t_o", "returns", "range_size", "aborted"}, {}};
  const auto kind = mirror_kind(spec.lattice);
  if (spec.times.empty()) throw SpecError("times", "at least one time is required");
  for (auto seed : spec.seeds) {
    const auto rc = return_count_experiment(kind, seed, spec.times, spec.world_limit);
    for (std::size_t i = 0; i < rc.times.size(); ++i) {
      t.rows.push_back(json::array({seed, spec.lattice, rc.times[i], rc.odometer[i], rc.returns[i], rc.range_sizes[i], false}));
    }
    if (rc.aborted) t.rows.push_back(json::array({seed, spec.lattice, nullptr, nullptr, nullptr, nullptr, true}));
  }
  return t;
}

Table run_cycle_lemma(const ExperimentSpec& spec, RunResult& result) {
  Table t{{"seed", "lattice", "ell", "cycle", "exited", "returns_before_exit", "steps", "ok"}, {}};
  const auto kind = mirror_kind(spec.lattice);
  if (spec.ells.empty()) throw SpecError("ells", "at least one annulus size is required");
  for (auto seed : spec.seeds) {
    for (int ell : spec.ells) {
      const auto run = check_cycle_lemma(kind, seed, ell, spec.budget);
      t.rows.push_back(json::array(
          {seed, spec.lattice, ell, run.cycle, run.exited, run.returns_before_exit, run.steps, run.ok()}));
      if (!run.ok()) {
        note_violation(result, "seed " + std::to_string(seed) + " ell " + std::to_string(ell) +
                                   ": fewer than two returns before leaving the annulus");
      }
    }
  }
  return t;
}

Table run_cover(const ExperimentSpec& spec, RunResult& result) {
  Table t{{"graph_id", "n", "m_directed", "D", "t_vertex", "t_edge", "K", "thm61_vertex", "thm61_edge",
           "fs_vertex", "fs_edge", "cor62"},
          {}};
  std::vector<BatteryInstance> instances;
  if (spec.battery) {
    instances = cover_battery(spec.battery_seed, spec.battery_count);
  } else {
    const auto g = build_graph(spec.graph, spec.world_limit);
    if (!g.is_finite()) throw SpecError("graph.kind", "cover experiments need a finite graph");
    if (!g.contains(spec.origin)) throw SpecError("origin", "origin is not a vertex of the graph");
    for (auto seed : spec.seeds) {
      instances.push_back({spec.graph.builder + "/" + spec.config.kind + "/seed" + std::to_string(seed), g,
                           make_config(spec, g, seed), spec.origin});
    }
  }
  for (const auto& inst : instances) {
    const auto& g = inst.graph;
    const auto d = static_cast<std::uint64_t>(diameter(g));
    const auto e = static_cast<std::uint64_t>(g.edge_count());
    const auto rep = cover_times(g, inst.config, inst.origin, std::max<std::uint64_t>((d + 1) * e + 1, spec.budget));
    const bool tv_ok = rep.t_vertex && *rep.t_vertex <= d * e;
    const bool te_ok = rep.t_edge && *rep.t_edge <= (d + 1) * e;
    json k = nullptr, fs_v = nullptr, fs_e = nullptr, cor = nullptr;
    if (spec.compute_k) {
      const double kv = compute_K(g).k;
      k = kv;
      fs_v = rep.t_vertex && static_cast<double>(*rep.t_vertex) <= kv + 1;
      fs_e = rep.t_edge && static_cast<double>(*rep.t_edge) <= 3 * kv;
      cor = kv >= 0.25 * static_cast<double>(d * e) - 1;
    }
    t.rows.push_back(json::array({inst.name, g.vertex_count(), e, d,
                                  rep.t_vertex ? json(*rep.t_vertex) : json(nullptr),
                                  rep.t_edge ? json(*rep.t_edge) : json(nullptr), k, tv_ok, te_ok, fs_v, fs_e, cor}));
    if (!tv_ok || !te_ok) note_violation(result, inst.name + ": cover time exceeds the D#E bound");
  }
  return t;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  auto parse = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw SpecError("--seeds", "expected 'a..b' with non-negative integers, got '" + text + "'");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse(text);
    return {v, v};
  }
  const auto a = parse(text.substr(0, dots)), b = parse(text.substr(dots + 2));
  if (b < a) throw SpecError("--seeds", "empty seed range '" + text + "'");
  return {a, b};
}

ExperimentSpec parse_spec(const std::string& json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError("spec", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("spec", "expected a JSON object");
  reject_unknown(j, {"experiment", "graph", "config", "seeds", "origin", "steps", "checkpoints", "world_limit", "n",
                     "c", "multiplier", "lattice", "times", "ells", "budget", "battery", "compute_k", "outputs",
                     "render_excursions"},
                 "");
  ExperimentSpec spec;
  if (!j.contains("experiment")) throw SpecError("experiment", "missing");
  spec.experiment = get_field<std::string>(j, "experiment", "experiment");
  if (!kExperiments.contains(spec.experiment)) {
    throw SpecError("experiment", "unknown experiment '" + spec.experiment + "'");
  }
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
  };

  if (j.contains("graph")) {
    const auto& gj = j["graph"];
    if (!gj.is_object()) throw SpecError("graph", "expected an object");
    reject_unknown(gj, {"kind", "builder", "file", "n", "length", "thickness"}, "graph.");
    spec.graph.kind = get_field<std::string>(gj, "kind", "graph.kind");
    if (spec.graph.kind != "finite") {
      try {
        graph_kind_from_string(spec.graph.kind);
      } catch (const GraphError& e) {
        throw SpecError("graph.kind", e.what());
      }
    } else {
      spec.graph.builder = gj.contains("builder") ? get_field<std::string>(gj, "builder", "graph.builder") : "file";
      if (gj.contains("file")) spec.graph.file = resolve(get_field<std::string>(gj, "file", "graph.file"));
      if (gj.contains("n")) spec.graph.n = get_field<int>(gj, "n", "graph.n");
      if (gj.contains("length")) spec.graph.length = get_field<int>(gj, "length", "graph.length");
      if (gj.contains("thickness")) spec.graph.thickness = get_field<int>(gj, "thickness", "graph.thickness");
    }
  }
  if (j.contains("config")) {
    const auto& cj = j["config"];
    if (!cj.is_object()) throw SpecError("config", "expected an object");
    reject_unknown(cj, {"kind", "file"}, "config.");
    spec.config.kind = get_field<std::string>(cj, "kind", "config.kind");
    static const std::set<std::string> kinds{"uniform", "diamond", "path-to-origin", "tree-to-origin", "explicit"};
    if (!kinds.contains(spec.config.kind)) throw SpecError("config.kind", "unknown kind '" + spec.config.kind + "'");
    if (cj.contains("file")) spec.config.file = resolve(get_field<std::string>(cj, "file", "config.file"));
  }
  if (j.contains("seeds")) spec.seeds = parse_seeds(j["seeds"]);
  if (j.contains("origin")) {
    const auto& o = j["origin"];
    if (o.is_number_integer()) {
      spec.origin = finite_vertex(o.get<std::int64_t>());
    } else if (o.is_array() && o.size() == 2 && o[0].is_number_integer() && o[1].is_number_integer()) {
      spec.origin = {o[0].get<std::int64_t>(), o[1].get<std::int64_t>()};
    } else {
      throw SpecError("origin", "expected an integer or [x, y]");
    }
  }
  if (j.contains("steps")) spec.steps = get_u64(j, "steps", "steps");
  if (j.contains("checkpoints")) spec.checkpoints = get_u64_list(j, "checkpoints", "checkpoints");
  if (j.contains("world_limit")) {
    const auto w = get_u64(j, "world_limit", "world_limit");
    if (w < 1 || w > static_cast<std::uint64_t>(kDefaultWorldLimit)) throw SpecError("world_limit", "out of range");
    spec.world_limit = static_cast<std::int64_t>(w);
  }
  if (j.contains("n")) spec.n = static_cast<std::int64_t>(get_u64(j, "n", "n"));
  if (j.contains("c")) spec.c = get_field<double>(j, "c", "c");
  if (j.contains("multiplier")) spec.multiplier = static_cast<int>(get_u64(j, "multiplier", "multiplier"));
  if (j.contains("lattice")) spec.lattice = get_field<std::string>(j, "lattice", "lattice");
  if (j.contains("times")) spec.times = get_u64_list(j, "times", "times");
  if (j.contains("ells")) {
    for (auto e : get_u64_list(j, "ells", "ells")) {
      if (e < 1 || e > 1000) throw SpecError("ells", "annulus sizes must lie in [1, 1000]");
      spec.ells.push_back(static_cast<int>(e));
    }
  }
  if (j.contains("budget")) spec.budget = get_u64(j, "budget", "budget");
  if (j.contains("battery")) {
    const auto& bj = j["battery"];
    if (!bj.is_object()) throw SpecError("battery", "expected {\"seed\": s, \"count\": k}");
    reject_unknown(bj, {"seed", "count"}, "battery.");
    spec.battery = true;
    spec.battery_seed = get_u64(bj, "seed", "battery.seed");
    spec.battery_count = static_cast<int>(get_u64(bj, "count", "battery.count"));
  }
  if (j.contains("compute_k")) spec.compute_k = get_field<bool>(j, "compute_k", "compute_k");
  if (j.contains("render_excursions")) spec.render_excursions = get_u64(j, "render_excursions", "render_excursions");
  if (j.contains("outputs")) {
    const auto& oj = j["outputs"];
    if (!oj.is_object()) throw SpecError("outputs", "expected an object");
    reject_unknown(oj, {"csv", "json", "ppm"}, "outputs.");
    if (oj.contains("csv")) spec.csv = get_field<std::string>(oj, "csv", "outputs.csv");
    if (oj.contains("json")) spec.json = get_field<std::string>(oj, "json", "outputs.json");
    if (oj.contains("ppm")) spec.ppm = get_field<std::string>(oj, "ppm", "outputs.ppm");
  }

  // Cross-field requirements.
  const bool needs_seeds = !(spec.experiment == "cover" && spec.battery);
  if (needs_seeds && spec.seeds.empty()) throw SpecError("seeds", "explicit seeds are required");
  if (spec.experiment == "walk" && spec.steps == 0) throw SpecError("steps", "walk experiments need steps >= 1");
  if (spec.experiment == "comb-shape" && spec.n < 2) throw SpecError("n", "comb-shape needs n >= 2");
  if (spec.experiment == "comb-shape" && !(spec.c > 0)) throw SpecError("c", "must be positive");
  if (spec.experiment == "mirror-returns" || spec.experiment == "cycle-lemma") mirror_kind(spec.lattice);
  if (spec.experiment == "cover" && !spec.battery && spec.graph.kind != "finite") {
    throw SpecError("graph.kind", "cover experiments need a finite graph or a battery");
  }
  if (!spec.ppm.empty() && spec.experiment != "walk") throw SpecError("outputs.ppm", "only walk experiments render");
  spec.canonical = j.dump();
  return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("--spec", "cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path.parent_path());
}

void apply_overrides(ExperimentSpec& spec, const RunOptions& options) {
  if (options.seeds) {
    spec.seeds.clear();
    for (auto s = options.seeds->first; s <= options.seeds->second; ++s) spec.seeds.push_back(s);
    spec.canonical += "|seeds=" + std::to_string(options.seeds->first) + ".." + std::to_string(options.seeds->second);
  }
  if (options.budget) {
    if (spec.experiment == "walk") {
      if (*options.budget == 0) throw SpecError("--budget", "must be >= 1");
      spec.steps = *options.budget;
    } else {
      spec.budget = *options.budget;
    }
    spec.canonical += "|budget=" + std::to_string(*options.budget);
  }
  if (options.world_limit) {
    if (*options.world_limit < 1 || *options.world_limit > kDefaultWorldLimit) {
      throw SpecError("--world-limit", "out of range");
    }
    spec.world_limit = *options.world_limit;
    spec.canonical += "|world_limit=" + std::to_string(*options.world_limit);
  }
}

std::string spec_hash(const ExperimentSpec& spec) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(spec.canonical)));
  return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path.string() + "'");
  }
}

std::string render_experiment(const ExperimentSpec& spec) {
  if (spec.seeds.empty()) throw SpecError("seeds", "rendering needs a seed");
  const auto g = build_graph(spec.graph, spec.world_limit);
  if (g.is_finite()) throw SpecError("graph.kind", "rendering needs a lattice");
  const auto cfg = make_config(spec, g, spec.seeds.front());
  const std::uint64_t budget = spec.steps > 0 ? spec.steps : spec.budget;
  const auto labels = label_excursions(g, cfg, spec.origin, spec.render_excursions, budget);
  return render_ppm(labels, bounding_window(labels));
}

RunResult run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
  RunResult result;
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec || !std::filesystem::is_directory(options.out_dir)) {
    throw std::runtime_error("output directory '" + options.out_dir.string() + "' is not writable");
  }
  Table table;
  if (spec.experiment == "walk") table = run_walk(spec, result);
  else if (spec.experiment == "comb-shape") table = run_comb(spec, result);
  else if (spec.experiment == "mirror-returns") table = run_mirror_returns(spec, result);
  else if (spec.experiment == "cycle-lemma") table = run_cycle_lemma(spec, result);
  else table = run_cover(spec, result);

  const std::string csv = to_csv(table);
  if (!spec.csv.empty()) {
    write_atomic(options.out_dir / spec.csv, csv);
    result.written.push_back(options.out_dir / spec.csv);
  }
  if (!spec.json.empty()) {
    write_atomic(options.out_dir / spec.json, to_json(table, spec, result));
    result.written.push_back(options.out_dir / spec.json);
  }
  if (!spec.ppm.empty()) {
    write_atomic(options.out_dir / spec.ppm, render_experiment(spec));
    result.written.push_back(options.out_dir / spec.ppm);
  }
  std::ostringstream os;
  os << spec.experiment << ": " << table.rows.size() << " rows, " << result.violations.size()
     << " invariant violations, spec " << spec_hash(spec);
  result.summary = os.str();
  if (spec.csv.empty() && spec.json.empty()) result.summary += "\n" + csv;
  return result;
}

}  // namespace rotor
