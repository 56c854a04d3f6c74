#include "loopss/chart.hpp"

#include <algorithm>
#include <sstream>

namespace loopss {

namespace {

// Arrow multiplicity: gcd of the magnitudes of the matrix entries, so a
// 1x1 matrix [k] annotates as |k| and a zero map as 0.
Int arrow_multiplicity(const IntMatrix& m) {
  Int g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      g = boost::multiprecision::gcd(g, m.at(i, j));
  return g;
}

}  // namespace

ChartGrid chart_grid(const Page& page, const DifferentialSpec* spec) {
  ChartGrid grid;
  grid.d = page.dimension;
  grid.t_top = std::max(page.reliable_t_max, 0);
  grid.rows.assign(grid.t_top + 1, std::vector<ChartCell>(page.dimension + 1));

  for (int t = 0; t <= grid.t_top; ++t)
    for (int s = -page.dimension; s <= 0; ++s) {
      ChartCell& spot = grid.rows[t][s + page.dimension];
      const Cell* cell = page.cell(s, t);
      spot.label = cell ? cell->group.to_string() : ".";
      if (!cell || !spec || spec->r != page.r || spec->zero()) continue;
      const int ts = s - page.r;
      const int tt = t + page.r - 1;
      if (ts < -page.dimension || tt > page.reliable_t_max) continue;
      const Cell* target = page.cell(ts, tt);
      if (!target) continue;
      IntMatrix m = differential_matrix(page, *spec, s, t);
      std::ostringstream os;
      os << "x" << arrow_multiplicity(m);
      spot.annotation = os.str();
    }
  return grid;
}

std::string render_chart(const Page& page, const DifferentialSpec* spec,
                         const std::string& title) {
  ChartGrid grid = chart_grid(page, spec);
  const std::size_t ncols = static_cast<std::size_t>(grid.d) + 1;

  std::vector<std::string> headers(ncols);
  std::vector<std::size_t> widths(ncols);
  for (std::size_t c = 0; c < ncols; ++c) {
    headers[c] = "s=" + std::to_string(static_cast<int>(c) - grid.d);
    widths[c] = headers[c].size();
  }
  auto cell_text = [](const ChartCell& cell) {
    return cell.annotation.empty() ? cell.label : cell.label + " " + cell.annotation;
  };
  for (const auto& row : grid.rows)
    for (std::size_t c = 0; c < ncols; ++c)
      widths[c] = std::max(widths[c], cell_text(row[c]).size());

  std::ostringstream os;
  os << title << "\n";
  os << "page r=" << page.r << (page.infinity ? " (stable)" : "") << ", window s in [-"
     << grid.d << ",0], t <= " << page.t_max << ", reliable t <= " << page.reliable_t_max
     << "\n";
  for (int t = grid.t_top; t >= 0; --t) {
    os << " t=" << t;
    for (std::size_t pad = std::to_string(t).size(); pad < 4; ++pad) os << ' ';
    for (std::size_t c = 0; c < ncols; ++c) {
      std::string text = cell_text(grid.rows[t][c]);
      os << "| " << text << std::string(widths[c] - text.size() + 1, ' ');
    }
    os << "|\n";
  }
  os << "      ";
  for (std::size_t c = 0; c < ncols; ++c)
    os << "| " << headers[c] << std::string(widths[c] - headers[c].size() + 1, ' ');
  os << "|\n";
  if (spec && spec->r == page.r && !spec->zero())
    os << "arrows: d_" << page.r << " maps (s,t) -> (s-" << page.r << ",t+" << page.r - 1
       << "); xk marks the multiplicity\n";
  return os.str();
}

std::string render_svg(const Page& page, const DifferentialSpec* spec,
                       const std::string& title) {
  ChartGrid grid = chart_grid(page, spec);
  const int cell_w = 90, cell_h = 34, margin = 60;
  const int width = margin * 2 + (grid.d + 1) * cell_w;
  const int height = margin * 2 + (grid.t_top + 1) * cell_h;
  auto cx = [&](int s) { return margin + (s + grid.d) * cell_w + cell_w / 2; };
  auto cy = [&](int t) { return height - margin - t * cell_h - cell_h / 2; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  os << "  <text x=\"" << margin << "\" y=\"" << margin / 2 << "\">" << title << " (r="
     << page.r << ")</text>\n";
  for (int t = 0; t <= grid.t_top; ++t)
    os << "  <text x=\"" << margin / 4 << "\" y=\"" << cy(t) + 4 << "\">t=" << t
       << "</text>\n";
  for (int s = -grid.d; s <= 0; ++s)
    os << "  <text x=\"" << cx(s) - 12 << "\" y=\"" << height - margin / 2 << "\">s=" << s
       << "</text>\n";
  for (int t = 0; t <= grid.t_top; ++t)
    for (int s = -grid.d; s <= 0; ++s) {
      const ChartCell& cell = grid.rows[t][s + grid.d];
      if (cell.label == ".") continue;
      os << "  <text x=\"" << cx(s) - 10 << "\" y=\"" << cy(t) + 4 << "\">" << cell.label
         << "</text>\n";
      if (!cell.annotation.empty()) {
        int tx = cx(s - page.r) + 18, ty = cy(t + page.r - 1) + 8;
        os << "  <line x1=\"" << cx(s) - 14 << "\" y1=\"" << cy(t) << "\" x2=\"" << tx
           << "\" y2=\"" << ty << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
        os << "  <text x=\"" << (cx(s) + tx) / 2 << "\" y=\"" << (cy(t) + ty) / 2 - 4
           << "\">" << cell.annotation << "</text>\n";
      }
    }
  os << "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
        "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace loopss
