// rotor: command-line front end for the experiment runner.
//   rotor run --spec S [--out DIR] [--seeds a..b] [--budget N] [--world-limit L]
//   rotor validate --spec S
//   rotor render --spec S --out FILE.ppm
//   rotor fit --csv FILE        (columns t,value; prints the log-log slope)
// Exit codes: 0 success, 1 usage/spec/io error, 2 invariant violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rotor/experiment.hpp"
#include "rotor/report.hpp"

namespace {

std::vector<std::pair<double, double>> read_fit_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::vector<std::pair<double, double>> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected t,value");
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    char* end = nullptr;
    const double t = std::strtod(a.c_str(), &end);
    if (end == a.c_str()) {
      if (lineno == 1) continue;  // header
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": not a number");
    }
    const double v = std::strtod(b.c_str(), &end);
    if (end == b.c_str()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": not a number");
    points.emplace_back(t, v);
  }
  return points;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotor-walk simulation and verification toolkit"};
  app.set_version_flag("--version", std::string(rotor::kToolVersion));
  app.require_subcommand(1);

  std::string spec_path, out, seeds, csv_path;
  std::optional<std::uint64_t> budget;
  std::optional<std::int64_t> world_limit;

  auto* run = app.add_subcommand("run", "run an experiment spec");
  run->add_option("--spec", spec_path, "experiment spec (JSON)")->required();
  run->add_option("--out", out, "output directory")->default_val(".");
  run->add_option("--seeds", seeds, "override seeds, inclusive range a..b");
  run->add_option("--budget", budget, "override step budget");
  run->add_option("--world-limit", world_limit, "override lattice coordinate bound");

  auto* validate = app.add_subcommand("validate", "parse a spec and report errors");
  validate->add_option("--spec", spec_path, "experiment spec (JSON)")->required();

  auto* render = app.add_subcommand("render", "render the excursion picture of the first seed");
  render->add_option("--spec", spec_path, "experiment spec (JSON)")->required();
  render->add_option("--out", out, "output PPM file")->required();
  render->add_option("--seeds", seeds, "override seeds, inclusive range a..b");
  render->add_option("--budget", budget, "override step budget");

  auto* fit = app.add_subcommand("fit", "least-squares log-log exponent of t,value rows");
  fit->add_option("--csv", csv_path, "CSV with columns t,value")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*fit) {
      const auto f = rotor::fit_exponent(read_fit_csv(csv_path));
      std::printf("slope=%.10g intercept=%.10g r2=%.10g\n", f.slope, f.intercept, f.r2);
      return 0;
    }
    auto spec = rotor::load_spec(spec_path);
    rotor::RunOptions opts;
    if (!seeds.empty()) opts.seeds = rotor::parse_seed_range(seeds);
    opts.budget = budget;
    opts.world_limit = world_limit;
    rotor::apply_overrides(spec, opts);
    if (*validate) {
      std::cout << "ok " << spec.experiment << " " << rotor::spec_hash(spec) << "\n";
      return 0;
    }
    if (*render) {
      rotor::write_atomic(out, rotor::render_experiment(spec));
      std::cout << "wrote " << out << "\n";
      return 0;
    }
    opts.out_dir = out;
    const auto result = rotor::run_experiment(spec, opts);
    std::cout << result.summary << "\n";
    for (const auto& p : result.written) std::cout << "wrote " << p.string() << "\n";
    for (const auto& v : result.violations) std::cerr << "violation: " << v << "\n";
    return result.exit_code;
  } catch (const rotor::SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
