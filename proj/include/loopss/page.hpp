#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "loopss/abelian_group.hpp"
#include "loopss/differential.hpp"
#include "loopss/presentation.hpp"

namespace loopss {

/// One bigraded spot of a page: its group and one representative per class,
/// kept as integer combinations of the E2 monomial basis of the bidegree.
/// Representatives of a page-r cell are cycles for all earlier differentials.
struct Cell {
  int s = 0;
  int t = 0;
  std::vector<Monomial> e2_basis;  // sorted; fixed across pages
  FGAbelianGroup group;
  std::vector<Combo> reps;  // free classes first, then torsion classes
  /// Composition E2-monomial coordinates -> ... -> current class coordinates.
  std::vector<ClassMap> coord_chain;
  bool unreliable = false;

  bool empty() const { return group.trivial(); }
  std::vector<Int> moduli() const { return group.moduli(); }

  std::vector<Int> e2_coordinates(const Combo& c) const;
  /// Coordinates of a permanent-cycle combination in the current classes.
  /// Raises ConsistencyError when the combination is not a cycle at some page.
  std::vector<Int> class_coordinates(const Combo& c) const;
};

/// A page E^r over the window s in [-d, 0], 0 <= t <= t_max. Cells above
/// `reliable_t_max` carry values whose incoming data would originate above
/// the window; they are marked, never recomputed.
struct Page {
  int r = 2;
  int dimension = 0;
  int t_max = 0;
  int reliable_t_max = 0;
  bool infinity = false;
  AlgebraPresentation presentation;  // the E2 presentation
  std::map<std::pair<int, int>, Cell> cells;

  bool in_window(int s, int t) const {
    return s >= -dimension && s <= 0 && t >= 0 && t <= t_max;
  }
  /// Nonzero cell at (s, t), or nullptr.
  const Cell* cell(int s, int t) const;
  /// Any stored cell, including ones whose group has died; those keep their
  /// coordinate chains so later differentials into them resolve to zero.
  const Cell* stored_cell(int s, int t) const;
};

/// E2 of the loop homology spectral sequence from a validated presentation:
/// free on the monomial basis per bidegree, minus torsion contributed by
/// torsion relations; representatives are the monomials themselves.
Page build_initial_page(const AlgebraPresentation& p, int dimension, int t_max);

/// Matrix of d_r from the (s, t) cell basis to the (s-r, t+r-1) cell basis,
/// computed by Leibniz extension on representatives. Both cells must be
/// inside the window. Rejects images outside the target span.
IntMatrix differential_matrix(const Page& page, const DifferentialSpec& spec, int s, int t);

/// One page turn: every cell is replaced by the homology of its incoming and
/// outgoing differentials; representatives are pushed through the class maps.
/// Asserts d∘d = 0 before computing. Cells whose outgoing data would leave
/// the window are carried forward and marked unreliable.
Page turn_page(const Page& page, const DifferentialSpec& spec);

/// Applies turn_page through r = dimension (zero spec where none supplied);
/// the column width of the window forces collapse beyond that. Appended zero
/// specs for r > dimension are validated and ignored.
Page run_to_infinity(const Page& page, std::vector<DifferentialSpec> specs);

/// (s, t, class index) within a page.
struct ClassRef {
  int s = 0;
  int t = 0;
  std::size_t index = 0;
  auto operator<=>(const ClassRef&) const = default;
};

/// Product of two classes, as coordinates in the (s1+s2, t1+t2) cell
/// (length 0 when that cell is trivial). Throws when the target row exceeds
/// the window or the product representative is not expressible.
std::vector<Int> class_product(const Page& page, const ClassRef& x, const ClassRef& y);

/// All pairwise products between classes of reliable cells whose target rows
/// stay within the reliable window.
struct ProductTable {
  std::map<std::pair<ClassRef, ClassRef>, std::vector<Int>> entries;
};
ProductTable product_table(const Page& page);

struct ExtensionPiece {
  int s = 0;
  int t = 0;
  FGAbelianGroup group;
  std::vector<std::string> basis;
};

/// Filtration pieces of one total degree of a stabilized page, in filtration
/// order, plus the ambiguity flag: raised when more than one piece is
/// nonzero or any piece has torsion. Extensions are reported, never resolved.
struct ExtensionReport {
  int total_degree = 0;
  std::vector<ExtensionPiece> pieces;
  bool ambiguous = false;
};
ExtensionReport extension_report(const Page& einf, int total_degree);

/// Direct sum of all cells with s + t = j. Additively this is the answer
/// only when extensions split; comparisons elsewhere use rank and
/// torsion-subgroup order. Refuses degrees whose row range is unreliable.
FGAbelianGroup assemble_total_degree(const Page& einf, int j);

}  // namespace loopss
