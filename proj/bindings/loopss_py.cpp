#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopss/chart.hpp"
#include "loopss/cli.hpp"
#include "loopss/json_out.hpp"
#include "loopss/model.hpp"

namespace py = pybind11;
using namespace loopss;

namespace {

py::object to_py_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

Int from_py_int(const py::handle& obj) { return Int(py::str(obj).cast<std::string>()); }

IntMatrix matrix_from_py(const py::sequence& rows) {
  std::size_t nrows = rows.size();
  std::size_t ncols = nrows ? py::sequence(rows[0]).size() : 0;
  IntMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    py::sequence row(rows[i]);
    if (row.size() != ncols) throw ValidationError("ragged matrix");
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = from_py_int(row[j]);
  }
  return m;
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py_int(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list torsion_to_py(const FGAbelianGroup& g) {
  py::list out;
  for (const Int& t : g.torsion) out.append(to_py_int(t));
  return out;
}

py::dict cell_to_py(const Cell& cell, const AlgebraPresentation& p) {
  py::dict d;
  d["s"] = cell.s;
  d["t"] = cell.t;
  d["rank"] = cell.group.rank;
  d["torsion"] = torsion_to_py(cell.group);
  py::list basis;
  for (const Combo& rep : cell.reps) basis.append(combo_to_string(rep, p));
  d["basis"] = basis;
  d["unreliable"] = cell.unreliable;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic engine for the loop homology spectral sequence";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  py::class_<FGAbelianGroup>(m, "AbelianGroup")
      .def_readonly("rank", &FGAbelianGroup::rank)
      .def_property_readonly("torsion", &torsion_to_py)
      .def("trivial", &FGAbelianGroup::trivial)
      .def("__eq__", [](const FGAbelianGroup& a, const FGAbelianGroup& b) { return a == b; })
      .def("__repr__", &FGAbelianGroup::to_string);

  py::class_<ManifoldModel>(m, "Model")
      .def_readonly("name", &ManifoldModel::name)
      .def_readonly("dimension", &ManifoldModel::dimension)
      .def("text", &model_to_text)
      .def("__repr__", [](const ManifoldModel& mm) { return "<Model " + mm.name + ">"; });

  py::class_<Page>(m, "Page")
      .def_readonly("r", &Page::r)
      .def_readonly("dimension", &Page::dimension)
      .def_readonly("t_max", &Page::t_max)
      .def_readonly("reliable_t_max", &Page::reliable_t_max)
      .def_readonly("infinity", &Page::infinity)
      .def("cell",
           [](const Page& page, int s, int t) -> py::object {
             const Cell* cell = page.cell(s, t);
             if (!cell) return py::none();
             return cell_to_py(*cell, page.presentation);
           })
      .def("cells",
           [](const Page& page) {
             py::list out;
             for (const auto& [key, cell] : page.cells)
               if (!cell.empty()) out.append(cell_to_py(cell, page.presentation));
             return out;
           })
      .def("__repr__", [](const Page& page) {
        return "<Page r=" + std::to_string(page.r) + (page.infinity ? " stable>" : ">");
      });

  m.def("sphere_model", &sphere_model, py::arg("n"));
  m.def("cpn_model", &cpn_model, py::arg("n"));
  m.def("parse_model", &custom_model_parse, py::arg("text"), py::arg("name") = "custom");
  m.def("load_model", &load_model_file, py::arg("path"));

  m.def("initial_page", &initial_page, py::arg("model"), py::arg("t_max"));
  m.def("infinity_page", &infinity_page, py::arg("model"), py::arg("t_max"));

  m.def("emit_json", [](const Page& page, const ManifoldModel& model) {
    std::vector<const Page*> pages{&page};
    return emit_json_pages(pages, model);
  });
  m.def("render_chart", [](const Page& page, const ManifoldModel& model) {
    return render_chart(page, spec_at(model, page.r), "chart: " + model.name);
  });

  m.def("assemble_total_degree", &assemble_total_degree, py::arg("page"), py::arg("j"));
  m.def("extension_report", [](const Page& page, int j) {
    ExtensionReport report = extension_report(page, j);
    py::dict d;
    d["total_degree"] = report.total_degree;
    d["ambiguous"] = report.ambiguous;
    py::list pieces;
    for (const ExtensionPiece& piece : report.pieces) {
      py::dict pd;
      pd["s"] = piece.s;
      pd["t"] = piece.t;
      pd["rank"] = piece.group.rank;
      pd["torsion"] = torsion_to_py(piece.group);
      pd["basis"] = piece.basis;
      pieces.append(pd);
    }
    d["pieces"] = pieces;
    return d;
  });

  m.def("ziller_reference", &ziller_reference, py::arg("n"), py::arg("k"));
  m.def(
      "verify",
      [](const ManifoldModel& model, const std::string& expect, int t_max) {
        Page einf = infinity_page(model, t_max);
        PresentationCandidate cand =
            expected_presentation(expect, model, einf.reliable_t_max - model.dimension);
        MatchResult res = match_presentation(einf, cand);
        return py::make_tuple(res.pass, res.message);
      },
      py::arg("model"), py::arg("expect"), py::arg("t_max"));

  m.def("circle_piece", [](int degree) {
    CircleDegreePiece piece = circle_total_degree_piece(degree);
    py::dict d;
    d["degree"] = piece.degree;
    d["zero"] = piece.zero;
    d["description"] = piece.description;
    d["basis"] = piece.basis_pattern;
    return d;
  });

  m.def("snf", [](const py::sequence& rows) {
    SNFResult res = smith_normal_form(matrix_from_py(rows));
    return py::make_tuple(matrix_to_py(res.U), matrix_to_py(res.D), matrix_to_py(res.V));
  });
  m.def("kernel_basis", [](const py::sequence& rows) {
    py::list out;
    for (const auto& v : kernel_basis(matrix_from_py(rows))) {
      py::list vec;
      for (const Int& x : v) vec.append(to_py_int(x));
      out.append(vec);
    }
    return out;
  });
  m.def("homology_of_pair", [](const py::sequence& d_in, const py::sequence& d_out) {
    Subquotient sub = homology_of_pair(matrix_from_py(d_in), matrix_from_py(d_out));
    return sub.group;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) { return run_cli(args); });
}
