#include "rotor/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rotor/walk.hpp"

namespace rotor {

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 3) throw std::invalid_argument("fit_exponent: need at least 3 points");
  double sx = 0, sy = 0;
  for (const auto& [t, v] : series) {
    if (!(t > 0) || !(v > 0)) throw std::invalid_argument("fit_exponent: t and value must be positive");
    sx += std::log(t);
    sy += std::log(v);
  }
  const double n = static_cast<double>(series.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [t, v] : series) {
    const double dx = std::log(t) - mx, dy = std::log(v) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw std::invalid_argument("fit_exponent: all t values are equal");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

const std::array<Rgb, kPaletteSize>& excursion_palette() {
  static const std::array<Rgb, kPaletteSize> palette{{
      {230, 25, 75},  {60, 180, 75},   {255, 225, 25}, {0, 130, 200},   {245, 130, 48},
      {145, 30, 180}, {70, 240, 240},  {240, 50, 230}, {210, 245, 60},  {250, 190, 212},
      {0, 128, 128},  {220, 190, 255}, {170, 110, 40}, {255, 250, 200}, {128, 0, 0},
      {170, 255, 195}, {128, 128, 0},  {255, 215, 180}, {0, 0, 128},    {128, 128, 128},
  }};
  return palette;
}

std::string render_ppm(const ExcursionLabels& labels, const Window& window) {
  if (window.xmax < window.xmin || window.ymax < window.ymin) throw std::invalid_argument("render_ppm: empty window");
  const auto w = window.width(), h = window.height();
  if (w > kMaxPixels || h > kMaxPixels || w * h > kMaxPixels) {
    throw std::length_error("render_ppm: window of " + std::to_string(w) + "x" + std::to_string(h) +
                            " exceeds 10^8 pixels");
  }
  std::string header = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  std::string out = header;
  out.resize(header.size() + 3 * w * h, static_cast<char>(255));
  const auto& palette = excursion_palette();
  for (const auto& [v, k] : labels) {
    if (v.x < window.xmin || v.x > window.xmax || v.y < window.ymin || v.y > window.ymax || k == 0) continue;
    const auto row = static_cast<std::uint64_t>(window.ymax - v.y);
    const auto col = static_cast<std::uint64_t>(v.x - window.xmin);
    const auto& c = palette[(k - 1) % kPaletteSize];
    const auto at = header.size() + 3 * (row * w + col);
    for (int i = 0; i < 3; ++i) out[at + static_cast<std::size_t>(i)] = static_cast<char>(c[static_cast<std::size_t>(i)]);
  }
  return out;
}

Window bounding_window(const ExcursionLabels& labels) {
  if (labels.empty()) return {};
  Window win{labels.begin()->first.x, labels.begin()->first.x, labels.begin()->first.y, labels.begin()->first.y};
  for (const auto& [v, k] : labels) {
    win.xmin = std::min(win.xmin, v.x);
    win.xmax = std::max(win.xmax, v.x);
    win.ymin = std::min(win.ymin, v.y);
    win.ymax = std::max(win.ymax, v.y);
  }
  return win;
}

ExcursionLabels label_excursions(const GraphModel& g, const ConfigProvider& config, Vertex origin,
                                 std::uint64_t excursions, std::uint64_t budget) {
  ExcursionLabels labels;
  RotorWalk walk(g, config, origin);
  while (walk.completed_excursions() < excursions && walk.time() < budget) {
    if (walk.departures(walk.position()) == 0) labels.emplace(walk.position(), walk.completed_excursions() + 1);
    walk.step();
  }
  return labels;
}

}  // namespace rotor
