#include "zap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zap::svg {

namespace {

constexpr double kW = 640, kH = 400, kL = 60, kR = 20, kT = 40, kB = 50;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string f(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const { return kL + (x - x0) / (x1 - x0) * (kW - kL - kR); }
  double py(double y) const { return kH - kB - (y - y0) / (y1 - y0) * (kH - kT - kB); }
};

std::string open(const std::string& title, const std::string& xlabel, const std::string& ylabel, const Frame& fr) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f(kW) + "\" height=\"" + f(kH) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + f(kW / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" + escape(title) + "</text>\n";
  s += "<line x1=\"" + f(kL) + "\" y1=\"" + f(kH - kB) + "\" x2=\"" + f(kW - kR) + "\" y2=\"" + f(kH - kB) +
       "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + f(kL) + "\" y1=\"" + f(kT) + "\" x2=\"" + f(kL) + "\" y2=\"" + f(kH - kB) +
       "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double x = fr.x0 + (fr.x1 - fr.x0) * i / 4, y = fr.y0 + (fr.y1 - fr.y0) * i / 4;
    s += "<text x=\"" + f(fr.px(x)) + "\" y=\"" + f(kH - kB + 16) + "\" text-anchor=\"middle\" font-size=\"11\">" +
         g(x) + "</text>\n";
    s += "<text x=\"" + f(kL - 6) + "\" y=\"" + f(fr.py(y) + 4) + "\" text-anchor=\"end\" font-size=\"11\">" + g(y) +
         "</text>\n";
  }
  s += "<text x=\"" + f(kW / 2) + "\" y=\"" + f(kH - 12) + "\" text-anchor=\"middle\" font-size=\"12\">" +
       escape(xlabel) + "</text>\n";
  s += "<text x=\"14\" y=\"" + f(kH / 2) + "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 " +
       f(kH / 2) + ")\">" + escape(ylabel) + "</text>\n";
  return s;
}

}  // namespace

std::string histogram(const std::vector<double>& values, double lo, double hi, int bins, const std::string& title,
                      const std::string& xlabel, const std::vector<Marker>& markers) {
  bins = std::max(bins, 1);
  if (!(hi > lo)) hi = lo + 1;
  std::vector<int> counts(bins, 0);
  for (double v : values) {
    if (!(v >= lo && v <= hi)) continue;
    const int b = std::min(bins - 1, static_cast<int>((v - lo) / (hi - lo) * bins));
    ++counts[b];
  }
  const int top = std::max(1, *std::max_element(counts.begin(), counts.end()));
  const Frame fr{lo, hi, 0, double(top)};
  std::string s = open(title, xlabel, "count", fr);
  const double bw = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) {
    if (!counts[b]) continue;
    const double x0 = fr.px(lo + b * bw), x1 = fr.px(lo + (b + 1) * bw), y = fr.py(counts[b]);
    s += "<rect x=\"" + f(x0) + "\" y=\"" + f(y) + "\" width=\"" + f(std::max(x1 - x0 - 1, 0.5)) + "\" height=\"" +
         f(kH - kB - y) + "\" fill=\"" + kColors[0] + "\"/>\n";
  }
  for (const auto& m : markers) {
    if (!(m.x >= lo && m.x <= hi)) continue;
    s += "<line x1=\"" + f(fr.px(m.x)) + "\" y1=\"" + f(kT) + "\" x2=\"" + f(fr.px(m.x)) + "\" y2=\"" + f(kH - kB) +
         "\" stroke=\"" + kColors[1] + "\" stroke-dasharray=\"4 3\"/>\n";
    s += "<text x=\"" + f(fr.px(m.x) + 3) + "\" y=\"" + f(kT + 12) + "\" font-size=\"11\" fill=\"" + kColors[1] +
         "\">" + escape(m.label) + "</text>\n";
  }
  return s + "</svg>\n";
}

std::string line_plot(const std::vector<Series>& series, const std::string& title, const std::string& xlabel,
                      const std::string& ylabel, double ref) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& sr : series)
    for (std::size_t i = 0; i < sr.x.size() && i < sr.y.size(); ++i) {
      x0 = std::min(x0, sr.x[i]);
      x1 = std::max(x1, sr.x[i]);
      y0 = std::min(y0, sr.y[i]);
      y1 = std::max(y1, sr.y[i]);
    }
  if (std::isfinite(ref)) {
    y0 = std::min(y0, ref);
    y1 = std::max(y1, ref);
  }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 <= x0) x1 = x0 + 1;
  if (y1 <= y0) y1 = y0 + 1;
  const double pad = 0.05 * (y1 - y0);
  const Frame fr{x0, x1, y0 - pad, y1 + pad};
  std::string s = open(title, xlabel, ylabel, fr);
  if (std::isfinite(ref))
    s += "<line x1=\"" + f(kL) + "\" y1=\"" + f(fr.py(ref)) + "\" x2=\"" + f(kW - kR) + "\" y2=\"" + f(fr.py(ref)) +
         "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& sr = series[k];
    const char* col = kColors[k % 5];
    s += "<polyline fill=\"none\" stroke=\"" + std::string(col) + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < sr.x.size() && i < sr.y.size(); ++i)
      s += f(fr.px(sr.x[i])) + "," + f(fr.py(sr.y[i])) + " ";
    s += "\"/>\n";
    s += "<text x=\"" + f(kW - kR - 4) + "\" y=\"" + f(kT + 14 * (k + 1)) + "\" text-anchor=\"end\" font-size=\"11\" fill=\"" +
         col + "\">" + escape(sr.label) + "</text>\n";
  }
  return s + "</svg>\n";
}

}  // namespace zap::svg
