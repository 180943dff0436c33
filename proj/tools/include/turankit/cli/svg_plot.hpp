#pragma once

// t_n together with both branches of T_n and T_{n+1} over an x-range, for the
// ultraspherical scheme, as an SVG 1.1 document.

#include "turankit/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace turankit::cli {

struct PlotConfig {
  Rational lambda;
  std::size_t n = 4;
  Rational theta;
  Rational x_lo = 0;
  Rational x_hi = 1;
  std::size_t samples = 512;
  unsigned precision_bits = kDefaultPrecisionBits;
};

using Polyline = std::vector<std::pair<double, double>>;

struct PlotSeries {
  std::string label;
  std::string colour;
  /// Separate pieces; breaks where the curve is complex or undefined.
  std::vector<Polyline> pieces;
};

struct PlotMarker {
  std::string label;
  double x = 0;
};

struct PlotData {
  PlotConfig config;
  std::vector<PlotSeries> series;  // t_n, T_n, T_{n+1}
  /// x~, x0 (when defined) and the two largest zeros x1, x2 of G_{n+1}.
  std::vector<PlotMarker> markers;
  double y_lo = 0;
  double y_hi = 1;
};

/// Throws std::invalid_argument for an empty or reversed range, fewer than
/// 2 samples, or invalid lambda / theta.
PlotData sample_plot(const PlotConfig& config);

std::string render_svg(const PlotData& data);

std::optional<double> marker_x(const PlotData& data, const std::string& label);

}  // namespace turankit::cli
