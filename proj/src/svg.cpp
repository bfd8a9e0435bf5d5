#include "vdw/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace vdw {

namespace {

constexpr double panel_width = 480.0;
constexpr double panel_height = 320.0;
constexpr double margin_left = 70.0;
constexpr double margin_top = 30.0;
constexpr double margin_bottom = 50.0;
constexpr double panel_gap = 40.0;

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string coord(double v) { return fmt("%.2f", v); }

struct Axis {
  double lo;
  double hi;
  bool log;
  double pix_lo;
  double pix_hi;

  double map(double v) const {
    const double a = log ? std::log10(lo) : lo;
    const double b = log ? std::log10(hi) : hi;
    const double x = log ? std::log10(v) : v;
    const double t = (b == a) ? 0.5 : (x - a) / (b - a);
    return pix_lo + t * (pix_hi - pix_lo);
  }
};

// Decades covering [lo, hi] for a log axis, or a few round values for a
// linear one.
std::vector<double> ticks(const Axis &axis) {
  std::vector<double> out;
  if (axis.log) {
    for (int e = static_cast<int>(std::floor(std::log10(axis.lo)));
         e <= static_cast<int>(std::ceil(std::log10(axis.hi))); ++e) {
      const double v = std::pow(10.0, e);
      if (v >= axis.lo * (1 - 1e-12) && v <= axis.hi * (1 + 1e-12))
        out.push_back(v);
    }
  } else {
    const double step = 0.25;
    for (double v = std::ceil(axis.lo / step) * step; v <= axis.hi + 1e-12;
         v += step)
      out.push_back(v);
  }
  return out;
}

std::string tick_label(const Axis &axis, double v) {
  if (axis.log)
    return "1e" + std::to_string(static_cast<int>(std::lround(std::log10(v))));
  return fmt("%.2f", v);
}

std::string polyline(const Axis &x, const Axis &y, const std::vector<double> &xs,
                     const std::vector<double> &ys, const std::string &style) {
  std::string pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i)
      pts += ' ';
    pts += coord(x.map(xs[i])) + "," + coord(y.map(ys[i]));
  }
  return "    <polyline fill=\"none\" " + style + " points=\"" + pts + "\"/>\n";
}

std::string frame(const Axis &x, const Axis &y, const std::string &xlabel,
                  const std::string &ylabel) {
  std::string s;
  s += "    <rect x=\"" + coord(x.pix_lo) + "\" y=\"" + coord(y.pix_hi) +
       "\" width=\"" + coord(x.pix_hi - x.pix_lo) + "\" height=\"" +
       coord(y.pix_lo - y.pix_hi) +
       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (double v : ticks(x)) {
    const std::string px = coord(x.map(v));
    s += "    <line x1=\"" + px + "\" y1=\"" + coord(y.pix_lo) + "\" x2=\"" +
         px + "\" y2=\"" + coord(y.pix_lo - 6) + "\" stroke=\"black\"/>\n";
    s += "    <text x=\"" + px + "\" y=\"" + coord(y.pix_lo + 18) +
         "\" text-anchor=\"middle\" font-size=\"12\">" + tick_label(x, v) +
         "</text>\n";
  }
  for (double v : ticks(y)) {
    const std::string py = coord(y.map(v));
    s += "    <line x1=\"" + coord(x.pix_lo) + "\" y1=\"" + py + "\" x2=\"" +
         coord(x.pix_lo + 6) + "\" y2=\"" + py + "\" stroke=\"black\"/>\n";
    s += "    <text x=\"" + coord(x.pix_lo - 8) + "\" y=\"" + coord(y.map(v) + 4) +
         "\" text-anchor=\"end\" font-size=\"12\">" + tick_label(y, v) +
         "</text>\n";
  }
  s += "    <text x=\"" + coord(0.5 * (x.pix_lo + x.pix_hi)) + "\" y=\"" +
       coord(y.pix_lo + 38) + "\" text-anchor=\"middle\" font-size=\"14\">" +
       xlabel + "</text>\n";
  s += "    <text x=\"" + coord(x.pix_lo - 55) + "\" y=\"" +
       coord(0.5 * (y.pix_lo + y.pix_hi)) +
       "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 " +
       coord(x.pix_lo - 55) + " " + coord(0.5 * (y.pix_lo + y.pix_hi)) +
       ")\">" + ylabel + "</text>\n";
  return s;
}

} // namespace

std::string render_crossover_svg(const CrossoverCurve &curve) {
  const double total_width = margin_left + panel_width + 30.0;
  const double total_height =
      2 * (margin_top + panel_height + margin_bottom) + panel_gap;

  double r_lo = curve.grid.front();
  double r_hi = curve.grid.back();
  if (r_lo == r_hi) {
    r_lo /= 10.0;
    r_hi *= 10.0;
  }
  const double london = asymptote_london();
  const double cp = asymptote_casimir_polder();

  double f_lo = *std::min_element(curve.energy.begin(), curve.energy.end());
  double f_hi = std::max(london, *std::max_element(curve.energy.begin(),
                                                   curve.energy.end()));
  f_lo = std::pow(10.0, std::floor(std::log10(f_lo)));
  f_hi = std::pow(10.0, std::ceil(std::log10(f_hi)));

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
       coord(total_width) + "\" height=\"" + coord(total_height) +
       "\" viewBox=\"0 0 " + coord(total_width) + " " + coord(total_height) +
       "\">\n";
  s += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Panel 1: F(r) with the two pure power-law asymptotes.
  {
    const double top = margin_top;
    const Axis x{r_lo, r_hi, true, margin_left, margin_left + panel_width};
    const Axis y{f_lo, f_hi, true, top + panel_height, top};
    s += "  <g class=\"plot\" id=\"energy\">\n";
    s += frame(x, y, "r = ΩR/c", "-E r⁶ / A²");
    const std::vector<double> ends = {r_lo, r_hi};
    s += polyline(x, y, ends, {london, london},
                  "stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    // Casimir-Polder line clipped to the panel.
    const double cp_lo = std::max(r_lo, cp / f_hi);
    const double cp_hi = std::min(r_hi, cp / f_lo);
    if (cp_lo < cp_hi)
      s += polyline(x, y, {cp_lo, cp_hi}, {cp / cp_lo, cp / cp_hi},
                    "stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    s += polyline(x, y, curve.grid, curve.energy,
                  "stroke=\"black\" stroke-width=\"2.5\"");
    s += "  </g>\n";
  }

  // Panel 2: logarithmic slope d log F / d log r.
  {
    const double top = 2 * margin_top + panel_height + margin_bottom + panel_gap;
    const Axis x{r_lo, r_hi, true, margin_left, margin_left + panel_width};
    const Axis y{-1.25, 0.25, false, top + panel_height, top};
    s += "  <g class=\"plot\" id=\"slope\">\n";
    s += frame(x, y, "r = ΩR/c", "d log(-E r⁶) / d log r");
    if (!curve.slope.empty())
      s += polyline(x, y, curve.grid, curve.slope,
                    "stroke=\"black\" stroke-width=\"2\"");
    s += "  </g>\n";
  }
  s += "</svg>\n";
  return s;
}

} // namespace vdw
