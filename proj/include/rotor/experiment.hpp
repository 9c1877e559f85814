#pragma once

// Declarative experiment runner behind the command-line tool. Specs are JSON
// documents; every run is a pure function of the spec (seeds are explicit).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotor/graph.hpp"

namespace rotor {

/// Invalid spec field; `field` is a dotted path such as "graph.kind".
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct GraphSelector {
  std::string kind = "z2";  // lattice name, or "finite"
  std::string builder;      // finite: cycle | path | complete | star | thick-cycle | file
  std::filesystem::path file;
  int n = 0;
  int length = 0;
  int thickness = 0;
};

struct ConfigSelector {
  std::string kind = "uniform";  // uniform | diamond | path-to-origin | tree-to-origin | explicit
  std::filesystem::path file;
};

struct ExperimentSpec {
  std::string experiment;  // walk | comb-shape | mirror-returns | cycle-lemma | cover
  GraphSelector graph;
  ConfigSelector config;
  std::vector<std::uint64_t> seeds;
  Vertex origin{};
  std::uint64_t steps = 0;
  std::vector<std::uint64_t> checkpoints;
  std::int64_t world_limit = kDefaultWorldLimit;
  // comb-shape
  std::int64_t n = 0;
  double c = 4.0;
  int multiplier = 6;
  // mirror-returns / cycle-lemma
  std::string lattice;
  std::vector<std::uint64_t> times;
  std::vector<int> ells;
  std::uint64_t budget = 10'000'000;
  // cover
  bool battery = false;
  std::uint64_t battery_seed = 0;
  int battery_count = 0;
  bool compute_k = true;
  // outputs, relative to the output directory
  std::string csv;
  std::string json;
  std::string ppm;
  std::uint64_t render_excursions = 20;

  std::string canonical;  // normalised JSON text, hashed into reports
};

ExperimentSpec parse_spec(const std::string& json_text, const std::filesystem::path& base_dir = {});
ExperimentSpec load_spec(const std::filesystem::path& path);

/// "a..b" (inclusive) or a single number.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text);

struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds;
  std::optional<std::uint64_t> budget;
  std::optional<std::int64_t> world_limit;
};

void apply_overrides(ExperimentSpec& spec, const RunOptions& options);

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 invariant violation
  std::vector<std::filesystem::path> written;
  std::vector<std::string> violations;
  std::string summary;
};

RunResult run_experiment(const ExperimentSpec& spec, const RunOptions& options);

/// Renders the range of the first seed, labelled by excursion, as PPM bytes.
std::string render_experiment(const ExperimentSpec& spec);

/// Write to a temporary sibling and rename over the target.
void write_atomic(const std::filesystem::path& path, const std::string& bytes);

std::string spec_hash(const ExperimentSpec& spec);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace rotor
