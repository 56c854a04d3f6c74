#pragma once

#include <string>
#include <vector>

#include "loopss/page.hpp"

namespace loopss {

/// One chart spot: the group label ("." when trivial) plus the outgoing
/// differential annotation ("x2", "x0", ... ; empty when no arrow lands in
/// a visible cell).
struct ChartCell {
  std::string label;
  std::string annotation;
};

/// Grid behind both the text chart and the SVG: rows[t][s + d], reliable
/// rows only, mirrored on the second-quadrant figures (s = -d leftmost).
struct ChartGrid {
  int d = 0;
  int t_top = 0;
  std::vector<std::vector<ChartCell>> rows;
};

ChartGrid chart_grid(const Page& page, const DifferentialSpec* spec);

std::string render_chart(const Page& page, const DifferentialSpec* spec,
                         const std::string& title);
std::string render_svg(const Page& page, const DifferentialSpec* spec, const std::string& title);

}  // namespace loopss
