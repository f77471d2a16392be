#ifndef GRS_SVG_HPP
#define GRS_SVG_HPP

#include <string>
#include <vector>

namespace grs {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal static scatter plot: axes, ticks, legend, one marker color per
/// series. Returns the SVG document as a string.
std::string svg_scatter(const std::vector<SvgSeries>& series,
                        const std::string& x_label,
                        const std::string& y_label,
                        const std::string& title);

}  // namespace grs

#endif
