#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gaugelat::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// Dark blue to yellow.
std::string colour(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(std::lround(30 + 225 * t));
  const int g = static_cast<int>(std::lround(30 + 200 * t));
  const int b = static_cast<int>(std::lround(120 - 90 * t));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string svg_scatter(const std::vector<ScatterPoint>& points, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel) {
  const double W = 800, H = 600, m = 60;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!points.empty()) {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;
  }
  auto X = [&](double x) { return m + (x - x0) / (x1 - x0) * (W - 2 * m); };
  auto Y = [&](double y) { return H - m - (y - y0) / (y1 - y0) * (H - 2 * m); };

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  s += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  s += "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">" + escape(title) + "</text>\n";
  s += "<rect x=\"60\" y=\"60\" width=\"680\" height=\"480\" fill=\"none\" stroke=\"black\"/>\n";
  s += "<text x=\"400\" y=\"580\" text-anchor=\"middle\" font-size=\"14\">" + escape(xlabel) + "</text>\n";
  s += "<text x=\"20\" y=\"300\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 300)\">" +
       escape(ylabel) + "</text>\n";
  s += "<text x=\"60\" y=\"556\" font-size=\"11\">" + label(x0) + "</text>\n";
  s += "<text x=\"740\" y=\"556\" text-anchor=\"end\" font-size=\"11\">" + label(x1) + "</text>\n";
  s += "<text x=\"56\" y=\"540\" text-anchor=\"end\" font-size=\"11\">" + label(y0) + "</text>\n";
  s += "<text x=\"56\" y=\"66\" text-anchor=\"end\" font-size=\"11\">" + label(y1) + "</text>\n";
  s += "<g fill=\"black\">\n";
  for (const auto& p : points)
    if (!p.highlight) s += "<circle cx=\"" + num(X(p.x)) + "\" cy=\"" + num(Y(p.y)) + "\" r=\"0.8\"/>\n";
  s += "</g>\n<g fill=\"#1f5fd0\">\n";
  for (const auto& p : points)
    if (p.highlight) s += "<circle cx=\"" + num(X(p.x)) + "\" cy=\"" + num(Y(p.y)) + "\" r=\"2.5\"/>\n";
  s += "</g>\n</svg>\n";
  return s;
}

std::string svg_heatmaps(const std::vector<HeatmapPanel>& panels, const std::string& title) {
  const double panel = 300, gap = 30, top = 60;
  const double W = gap + panels.size() * (panel + gap);
  const double H = top + panel + 50;
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" + num(H) +
                  "\" viewBox=\"0 0 " + num(W) + " " + num(H) + "\">\n";
  s += "<rect width=\"" + num(W) + "\" height=\"" + num(H) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(W / 2) + "\" y=\"25\" text-anchor=\"middle\" font-size=\"16\">" + escape(title) +
       "</text>\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const HeatmapPanel& p = panels[k];
    const double ox = gap + k * (panel + gap);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double v : p.values)
      if (std::isfinite(v)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    if (!(hi > lo)) hi = lo + 1;
    const double cw = panel / std::max(p.nx, 1), ch = panel / std::max(p.ny, 1);
    s += "<text x=\"" + num(ox + panel / 2) + "\" y=\"" + num(top - 8) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + escape(p.title) + "</text>\n";
    for (int iy = 0; iy < p.ny; ++iy)
      for (int ix = 0; ix < p.nx; ++ix) {
        const double v = p.values[static_cast<std::size_t>(ix + p.nx * iy)];
        if (!std::isfinite(v)) continue;
        s += "<rect x=\"" + num(ox + ix * cw) + "\" y=\"" + num(top + iy * ch) + "\" width=\"" + num(cw) +
             "\" height=\"" + num(ch) + "\" fill=\"" + colour((v - lo) / (hi - lo)) + "\"/>\n";
      }
    s += "<text x=\"" + num(ox) + "\" y=\"" + num(top + panel + 20) + "\" font-size=\"11\">min " + label(lo) +
         "  max " + label(hi) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace gaugelat::cli
