#include "loopss/json_out.hpp"

#include <algorithm>

#include <json.hpp>

namespace loopss {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_ll(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    throw ConsistencyError("emit_json: integer too large for the JSON schema");
  return static_cast<long long>(v);
}

std::vector<const Cell*> sorted_cells(const Page& page) {
  std::vector<const Cell*> cells;
  for (const auto& [key, cell] : page.cells) {
    if (cell.empty() || cell.t > page.reliable_t_max) continue;
    cells.push_back(&cell);
  }
  std::sort(cells.begin(), cells.end(), [](const Cell* a, const Cell* b) {
    if (a->s != b->s) return a->s > b->s;
    return a->t < b->t;
  });
  return cells;
}

ordered_json page_json(const Page& page, const DifferentialSpec* spec) {
  ordered_json j;
  j["r"] = page.r;
  j["window"] = ordered_json{{"d", page.dimension}, {"t_max", page.t_max}};

  ordered_json cells = ordered_json::array();
  for (const Cell* cell : sorted_cells(page)) {
    ordered_json c;
    c["s"] = cell->s;
    c["t"] = cell->t;
    c["rank"] = cell->group.rank;
    ordered_json torsion = ordered_json::array();
    for (const Int& t : cell->group.torsion) torsion.push_back(to_ll(t));
    c["torsion"] = std::move(torsion);
    ordered_json basis = ordered_json::array();
    for (const Combo& rep : cell->reps)
      basis.push_back(combo_to_string(rep, page.presentation));
    c["basis"] = std::move(basis);
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);

  ordered_json diffs = ordered_json::array();
  if (spec && spec->r == page.r && !spec->zero()) {
    for (const Cell* source : sorted_cells(page)) {
      const int ts = source->s - page.r;
      const int tt = source->t + page.r - 1;
      if (ts < -page.dimension || tt > page.reliable_t_max) continue;
      const Cell* target = page.cell(ts, tt);
      if (!target || target->t > page.reliable_t_max) continue;
      IntMatrix m = differential_matrix(page, *spec, source->s, source->t);
      ordered_json entry;
      entry["from"] = ordered_json::array({source->s, source->t});
      entry["to"] = ordered_json::array({ts, tt});
      ordered_json matrix = ordered_json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(to_ll(m.at(i, jj)));
        matrix.push_back(std::move(row));
      }
      entry["matrix"] = std::move(matrix);
      diffs.push_back(std::move(entry));
    }
  }
  j["differentials"] = std::move(diffs);
  return j;
}

}  // namespace

std::string emit_json(const Page& page, const DifferentialSpec* spec) {
  return page_json(page, spec).dump(2) + "\n";
}

std::string emit_json_pages(const std::vector<const Page*>& pages, const ManifoldModel& model) {
  if (pages.size() == 1)
    return emit_json(*pages.front(), spec_at(model, pages.front()->r));
  ordered_json arr = ordered_json::array();
  for (const Page* page : pages) arr.push_back(page_json(*page, spec_at(model, page->r)));
  return arr.dump(2) + "\n";
}

std::string circle_json() {
  ordered_json j;
  j["model"] = "circle";
  j["presentation"] = "Lambda[a] (x) Z[t,t^-1]";
  ordered_json pieces = ordered_json::array();
  for (int degree : {0, -1, 1}) {
    CircleDegreePiece piece = circle_total_degree_piece(degree);
    ordered_json p;
    p["degree"] = piece.degree;
    p["zero"] = piece.zero;
    p["description"] = piece.description;
    p["basis"] = piece.basis_pattern;
    pieces.push_back(std::move(p));
  }
  j["pieces"] = std::move(pieces);
  return j.dump(2) + "\n";
}

}  // namespace loopss
