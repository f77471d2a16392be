#include "grs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grs/errors.hpp"
#include "grs/io.hpp"

namespace grs {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 130;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 60;

const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                         "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double x) {
  // Pixel coordinates: two decimals are plenty and keep files stable.
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << x;
  return os.str();
}

// Round tick step to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step;
  if (norm < 1.5) step = 1.0;
  else if (norm < 3.5) step = 2.0;
  else if (norm < 7.5) step = 5.0;
  else step = 10.0;
  return step * mag;
}

}  // namespace

std::string svg_scatter(const std::vector<SvgSeries>& series,
                        const std::string& x_label, const std::string& y_label,
                        const std::string& title) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const SvgSeries& s : series) {
    if (s.x.size() != s.y.size()) {
      throw validation_error("svg_scatter: series length mismatch");
    }
    for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  }
  if (xmin > xmax) { xmin = 0.0; xmax = 1.0; ymin = 0.0; ymax = 1.0; }
  const double xpad = (xmax - xmin) * 0.05 + 1e-12;
  const double ypad = (ymax - ymin) * 0.05 + 1e-12;
  xmin -= xpad; xmax += xpad; ymin -= ypad; ymax += ypad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) {
    return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w;
  };
  auto py = [&](double y) {
    return kMarginTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // frame
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xstep = nice_step(xmax - xmin, 6);
  for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax; t += xstep) {
    const double x = px(t);
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kMarginTop + plot_h)
        << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(kMarginTop + plot_h + 6)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kMarginTop + plot_h + 22)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << format_double(std::round(t * 1e6) / 1e6)
        << "</text>\n";
  }
  const double ystep = nice_step(ymax - ymin, 6);
  for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax; t += ystep) {
    const double y = py(t);
    svg << "<line x1=\"" << fmt(kMarginLeft - 6) << "\" y1=\"" << fmt(y)
        << "\" x2=\"" << kMarginLeft << "\" y2=\"" << fmt(y)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt(kMarginLeft - 10) << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_double(std::round(t * 1e6) / 1e6) << "</text>\n";
  }

  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
      << kHeight - 16 << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"13\">" << x_label
      << "</text>\n";
  svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\" transform=\"rotate(-90 18 "
      << kMarginTop + plot_h / 2 << ")\">" << y_label << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % 8];
    for (std::size_t j = 0; j < series[i].x.size(); ++j) {
      svg << "<circle cx=\"" << fmt(px(series[i].x[j])) << "\" cy=\""
          << fmt(py(series[i].y[j])) << "\" r=\"4\" fill=\"" << color
          << "\"/>\n";
    }
    const double ly = kMarginTop + 14 + 18.0 * static_cast<double>(i);
    svg << "<circle cx=\"" << kWidth - kMarginRight + 16 << "\" cy=\""
        << fmt(ly - 4) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    svg << "<text x=\"" << kWidth - kMarginRight + 26 << "\" y=\"" << fmt(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[i].label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace grs
