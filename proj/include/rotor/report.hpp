#pragma once

// Exponent fitting and PPM rendering of excursion-labelled ranges.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rotor/config.hpp"
#include "rotor/graph.hpp"

namespace rotor {

struct ExponentFit {
  double slope = 0;
  double intercept = 0;  // log value = intercept + slope * log t
  double r2 = 0;
};

/// Unweighted least squares of log(value) on log(t). Needs >= 3 points, all positive.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& series);

using Rgb = std::array<std::uint8_t, 3>;
inline constexpr std::size_t kPaletteSize = 20;
const std::array<Rgb, kPaletteSize>& excursion_palette();
inline constexpr std::uint64_t kMaxPixels = 100'000'000;

struct Window {
  std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  std::uint64_t width() const { return static_cast<std::uint64_t>(xmax - xmin + 1); }
  std::uint64_t height() const { return static_cast<std::uint64_t>(ymax - ymin + 1); }
};

/// labels[v] = index (1-based) of the first excursion in which v fired.
using ExcursionLabels = std::unordered_map<Vertex, std::uint64_t, VertexHash>;

/// Binary P6 image, top row = ymax. Unlabelled pixels are white; label k uses
/// palette[(k - 1) mod 20]. Throws std::length_error above 10^8 pixels.
std::string render_ppm(const ExcursionLabels& labels, const Window& window);

/// Smallest window containing every labelled vertex (a 1x1 window at the origin if none).
Window bounding_window(const ExcursionLabels& labels);

/// Runs a lattice rotor walk for `excursions` excursions (or `budget` steps)
/// and labels vertices by the excursion of their first departure.
ExcursionLabels label_excursions(const GraphModel& g, const ConfigProvider& config, Vertex origin,
                                 std::uint64_t excursions, std::uint64_t budget);

}  // namespace rotor
