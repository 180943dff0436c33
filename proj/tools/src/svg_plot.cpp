#include "turankit/cli/svg_plot.hpp"

#include "turankit/curves.hpp"
#include "turankit/families.hpp"
#include "turankit/grid.hpp"
#include "turankit/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifndef TURANKIT_VERSION
#define TURANKIT_VERSION "unknown"
#endif

namespace turankit::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 170;  // legend column
constexpr double kTop = 30;
constexpr double kBottom = 50;

std::string fmt(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  if (s == "-0.00" || s == "-0.000") s.erase(0, 1);
  return s;
}

// Samples y(x) into pieces; nullopt breaks the line.
template <class F>
std::vector<Polyline> sample(const std::vector<Real>& grid, F&& y) {
  std::vector<Polyline> pieces(1);
  for (const Real& x : grid) {
    const std::optional<double> v = y(x);
    if (v && std::isfinite(*v)) {
      pieces.back().emplace_back(to_double(x), *v);
    } else if (!pieces.back().empty()) {
      pieces.emplace_back();
    }
  }
  if (pieces.back().empty()) pieces.pop_back();
  return pieces;
}

// Cuts every piece where it leaves [lo, hi].
std::vector<Polyline> clip(const std::vector<Polyline>& pieces, double lo, double hi) {
  std::vector<Polyline> out;
  for (const Polyline& piece : pieces) {
    Polyline cur;
    for (const auto& pt : piece) {
      if (pt.second >= lo && pt.second <= hi) {
        cur.push_back(pt);
      } else if (!cur.empty()) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
  }
  return out;
}

}  // namespace

PlotData sample_plot(const PlotConfig& config) {
  if (config.x_hi <= config.x_lo) throw std::invalid_argument("plot range must satisfy lo < hi");
  if (config.samples < 2) throw std::invalid_argument("plot needs at least 2 samples");
  if (config.n == 0) throw std::invalid_argument("plot needs n >= 1");
  const Precision p(config.precision_bits);
  const FamilySpec family = FamilySpec::ultraspherical(config.lambda);
  const UltrasphericalCurves scheme{config.lambda, config.n, config.theta};
  validate(scheme);

  const std::vector<Real> grid = uniform_grid(Interval{config.x_lo, config.x_hi}, config.samples, p);

  PlotData data;
  data.config = config;
  const std::string n_str = std::to_string(config.n);
  const std::string n1_str = std::to_string(config.n + 1);

  PlotSeries t{"t_" + n_str, "#000000", {}};
  t.pieces = sample(grid, [&](const Real& x) -> std::optional<double> {
    try {
      return to_double(ratio_t(family, config.n, x, p));
    } catch (const NearZeroDivision&) {
      return std::nullopt;
    }
  });

  auto branch = [&](Curve which, bool plus) {
    return sample(grid, [&](const Real& x) -> std::optional<double> {
      try {
        const CurveBranches b = branches(scheme, which, x, p);
        if (!b.real) return std::nullopt;
        return to_double(plus ? b.tau_plus : b.tau_minus);
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
    });
  };
  PlotSeries cur{"T_" + n_str, "#1f4fd1", {}};
  PlotSeries next{"T_" + n1_str, "#d1231f", {}};
  for (bool plus : {false, true}) {
    for (auto& piece : branch(Curve::Current, plus)) cur.pieces.push_back(std::move(piece));
    for (auto& piece : branch(Curve::Next, plus)) next.pieces.push_back(std::move(piece));
  }

  // The y-window follows the conics; t_n has poles and is clipped to it.
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const PlotSeries* s : {&cur, &next}) {
    for (const Polyline& piece : s->pieces) {
      for (const auto& pt : piece) {
        lo = std::min(lo, pt.second);
        hi = std::max(hi, pt.second);
      }
    }
  }
  if (!std::isfinite(lo)) {
    lo = -1;
    hi = 1;
  }
  const double pad = std::max(0.1 * (hi - lo), 1e-3);
  data.y_lo = lo - pad;
  data.y_hi = hi + pad;
  t.pieces = clip(t.pieces, data.y_lo, data.y_hi);
  data.series = {std::move(t), std::move(cur), std::move(next)};

  auto vertex_x = [&](Curve which) -> std::optional<double> {
    try {
      return to_double(vertex(scheme, which, p).x_vertex);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (auto x = vertex_x(Curve::Current)) data.markers.push_back({"x~", *x});
  if (auto x = vertex_x(Curve::Next)) data.markers.push_back({"x0", *x});
  if (config.n + 1 >= 2) {
    const ZeroSet zs = isolate_zeros(config.lambda, config.n + 1, default_zero_tolerance(), p);
    data.markers.push_back({"x1", to_double(zs.zeros[0])});
    data.markers.push_back({"x2", to_double(zs.zeros[1])});
  }
  return data;
}

std::optional<double> marker_x(const PlotData& data, const std::string& label) {
  for (const PlotMarker& m : data.markers) {
    if (m.label == label) return m.x;
  }
  return std::nullopt;
}

std::string render_svg(const PlotData& data) {
  const double x_lo = to_double(data.config.x_lo);
  const double x_hi = to_double(data.config.x_hi);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (data.y_hi - y) / (data.y_hi - data.y_lo) * plot_h; };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<!-- turankit " << TURANKIT_VERSION << " -->\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<title>lambda = " << to_string(data.config.lambda) << ", n = " << data.config.n
    << ", theta = " << to_string(data.config.theta) << "</title>\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"#ffffff\"/>\n";
  s << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h
    << "\" fill=\"none\" stroke=\"#000000\"/>\n";

  // Five ticks per axis.
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / 4;
    const double yv = data.y_lo + (data.y_hi - data.y_lo) * i / 4;
    s << "<line x1=\"" << fmt(px(xv)) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\"" << fmt(px(xv))
      << "\" y2=\"" << fmt(kTop + plot_h + 5) << "\" stroke=\"#000000\"/>\n";
    s << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << fmt(kTop + plot_h + 20) << "\" text-anchor=\"middle\">"
      << fmt(xv, 3) << "</text>\n";
    s << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(yv)) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
      << fmt(py(yv)) << "\" stroke=\"#000000\"/>\n";
    s << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(yv) + 4) << "\" text-anchor=\"end\">" << fmt(yv, 3)
      << "</text>\n";
  }
  s << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 10)
    << "\" text-anchor=\"middle\">x</text>\n";

  for (const PlotSeries& series : data.series) {
    s << "<g fill=\"none\" stroke=\"" << series.colour << "\" stroke-width=\"1.5\">\n";
    for (const Polyline& piece : series.pieces) {
      if (piece.size() < 2) continue;
      s << "<polyline points=\"";
      for (std::size_t i = 0; i < piece.size(); ++i) {
        if (i) s << ' ';
        s << fmt(px(piece[i].first)) << ',' << fmt(py(piece[i].second));
      }
      s << "\"/>\n";
    }
    s << "</g>\n";
  }

  for (const PlotMarker& m : data.markers) {
    if (m.x < x_lo || m.x > x_hi) continue;
    const bool vertex = m.label == "x~" || m.label == "x0";
    s << "<line x1=\"" << fmt(px(m.x)) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(px(m.x)) << "\" y2=\""
      << fmt(kTop + plot_h) << "\" stroke=\"" << (vertex ? "#2a8a2a" : "#888888")
      << "\" stroke-dasharray=\"" << (vertex ? "6,3" : "2,3") << "\"/>\n";
    s << "<text x=\"" << fmt(px(m.x) + 3) << "\" y=\"" << fmt(kTop + 12) << "\">" << (m.label == "x~" ? "x&#771;" : m.label)
      << "</text>\n";
  }

  double ly = kTop + 10;
  const double lx = kWidth - kRight + 20;
  for (const PlotSeries& series : data.series) {
    s << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 25) << "\" y2=\"" << fmt(ly)
      << "\" stroke=\"" << series.colour << "\" stroke-width=\"1.5\"/>\n";
    s << "<text x=\"" << fmt(lx + 32) << "\" y=\"" << fmt(ly + 4) << "\">" << series.label << "</text>\n";
    ly += 20;
  }
  for (const PlotMarker& m : data.markers) {
    s << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 4) << "\">" << (m.label == "x~" ? "x&#771;" : m.label)
      << " = " << fmt(m.x, 6) << "</text>\n";
    ly += 18;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace turankit::cli
