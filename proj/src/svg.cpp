#include "eqsort/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace eqsort {

namespace {

constexpr double kWidth = 960;
constexpr double kHeight = 540;
constexpr double kLeft = 80;
constexpr double kRight = kWidth - 210;  // room for the legend
constexpr double kTop = 52;
constexpr double kBottom = kHeight - 64;

const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Smallest "nice" step (1/2/2.5/5 x 10^m) giving at most ~5 intervals.
double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double mult = 10.0;
  if (frac <= 1.0) mult = 1.0;
  else if (frac <= 2.0) mult = 2.0;
  else if (frac <= 2.5) mult = 2.5;
  else if (frac <= 5.0) mult = 5.0;
  return mult * mag;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& y_label,
                              const std::vector<std::string>& x_labels,
                              const std::vector<SvgSeries>& series) {
  double max_v = 0.0;
  for (const auto& s : series) {
    for (const auto& v : s.values) {
      if (v && *v > max_v) max_v = *v;
    }
  }
  double step = 0.2, top = 1.0;
  if (max_v > 0.0) {
    step = nice_step(max_v);
    top = step * std::ceil(max_v / step - 1e-9);
    if (top <= 0.0) top = step;
  }

  const std::size_t nx = x_labels.size();
  auto x_at = [&](std::size_t i) {
    if (nx <= 1) return (kLeft + kRight) / 2.0;
    return kLeft + (kRight - kLeft) * static_cast<double>(i) / static_cast<double>(nx - 1);
  };
  auto y_at = [&](double v) { return kBottom - (kBottom - kTop) * (v / top); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"17\">"
      << xml_escape(title) << "</text>\n";

  // y axis: gridlines + tick labels
  for (double v = 0.0; v <= top + step / 2; v += step) {
    const double y = y_at(v);
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kRight)
        << "\" y2=\"" << num(y) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << tick_label(v)
        << "</text>\n";
  }
  out << "<text x=\"20\" y=\"" << num((kTop + kBottom) / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 20 "
      << num((kTop + kBottom) / 2) << ")\">" << xml_escape(y_label) << "</text>\n";

  // x axis: baseline + category ticks
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(kRight)
      << "\" y2=\"" << num(kBottom) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(kBottom) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = x_at(i);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(kBottom + 5) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(x) << "\" y=\"" << num(kBottom + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(x_labels[i]) << "</text>\n";
  }

  // series: polylines split on absent values, dot markers on every point
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % kPaletteSize];
    const char* dash = s.dashed ? " stroke-dasharray=\"6 4\"" : "";
    std::vector<std::pair<double, double>> run;
    auto flush = [&] {
      if (run.size() >= 2) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"" << dash
            << " points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) {
          if (i) out << ' ';
          out << num(run[i].first) << ',' << num(run[i].second);
        }
        out << "\"/>\n";
      }
      run.clear();
    };
    const std::size_t count = std::min(nx, s.values.size());
    for (std::size_t i = 0; i < count; ++i) {
      if (s.values[i]) {
        const double x = x_at(i), y = y_at(*s.values[i]);
        run.emplace_back(x, y);
        out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"" << color
            << "\"/>\n";
      } else {
        flush();
      }
    }
    flush();

    // legend entry
    const double ly = kTop + 10 + 22 * static_cast<double>(si);
    out << "<line x1=\"" << num(kRight + 16) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(kRight + 44) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"" << dash << "/>\n";
    out << "<text x=\"" << num(kRight + 50) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(s.label)
        << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace eqsort
