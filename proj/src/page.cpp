#include "loopss/page.hpp"

#include <algorithm>
#include <sstream>

namespace loopss {

namespace {

// Monomials in H^{> d}(M; -) columns vanish; drop them from raw products.
Combo window_reduce(const Combo& c, const AlgebraPresentation& p, int dimension) {
  Combo out;
  for (const auto& [mono, coef] : c) {
    auto [s, t] = bidegree_of(mono, p);
    if (s < -dimension) continue;
    combo_add_term(out, coef, mono, p);
  }
  return out;
}

std::string spot(int s, int t) {
  std::ostringstream os;
  os << "(" << s << "," << t << ")";
  return os.str();
}

}  // namespace

std::vector<Int> Cell::e2_coordinates(const Combo& c) const {
  std::vector<Int> out(e2_basis.size());
  for (const auto& [mono, coef] : c) {
    auto it = std::lower_bound(e2_basis.begin(), e2_basis.end(), mono);
    if (it == e2_basis.end() || !(*it == mono))
      throw ConsistencyError("cell " + spot(s, t) + ": combination leaves the monomial basis");
    out[static_cast<std::size_t>(it - e2_basis.begin())] = coef;
  }
  return out;
}

std::vector<Int> Cell::class_coordinates(const Combo& c) const {
  std::vector<Int> coords = e2_coordinates(c);
  for (const ClassMap& map : coord_chain) coords = map.apply(coords);
  return coords;
}

const Cell* Page::cell(int s, int t) const {
  auto it = cells.find({s, t});
  if (it == cells.end() || it->second.empty()) return nullptr;
  return &it->second;
}

const Cell* Page::stored_cell(int s, int t) const {
  auto it = cells.find({s, t});
  return it == cells.end() ? nullptr : &it->second;
}

Page build_initial_page(const AlgebraPresentation& p, int dimension, int t_max) {
  require_valid(p, dimension);
  if (p.has_laurent())
    throw ValidationError("build_initial_page: laurent models bypass the spectral sequence");
  if (dimension < 1) throw ValidationError("build_initial_page: dimension must be positive");
  if (t_max < 0) throw ValidationError("build_initial_page: t_max must be nonnegative");

  Page page;
  page.r = 2;
  page.dimension = dimension;
  page.t_max = t_max;
  page.reliable_t_max = t_max;
  page.presentation = p;

  for (int s = -dimension; s <= 0; ++s)
    for (int t = 0; t <= t_max; ++t) {
      std::vector<Monomial> basis = enumerate_basis(p, s, t);
      if (basis.empty()) continue;
      const std::size_t m = basis.size();
      std::vector<Int> moduli(m);
      for (std::size_t i = 0; i < m; ++i) moduli[i] = torsion_modulus_of(basis[i], p);
      Subquotient sub = subquotient(IntMatrix(m, 0), moduli, IntMatrix(0, 0), {});

      Cell cell;
      cell.s = s;
      cell.t = t;
      cell.e2_basis = basis;
      cell.group = sub.group;
      for (std::size_t c = 0; c < sub.group.class_count(); ++c) {
        Combo rep;
        for (std::size_t i = 0; i < m; ++i)
          if (sub.representatives.at(i, c) != 0)
            combo_add_term(rep, sub.representatives.at(i, c), basis[i], p);
        cell.reps.push_back(std::move(rep));
      }
      cell.coord_chain.push_back(sub.class_map);
      page.cells.emplace(std::make_pair(s, t), std::move(cell));
    }
  return page;
}

IntMatrix differential_matrix(const Page& page, const DifferentialSpec& spec, int s, int t) {
  if (spec.r != page.r)
    throw ValidationError("differential_matrix: spec page does not match");
  const int ts = s - spec.r;
  const int tt = t + spec.r - 1;
  if (!page.in_window(s, t) || !page.in_window(ts, tt))
    throw ValidationError("differential_matrix: cells outside the window");
  const Cell* source = page.stored_cell(s, t);
  const Cell* target = page.stored_cell(ts, tt);
  const std::size_t rows = target ? target->group.class_count() : 0;
  const std::size_t cols = source ? source->group.class_count() : 0;
  IntMatrix out(rows, cols);
  if (!source) return out;
  for (std::size_t j = 0; j < cols; ++j) {
    Combo image = leibniz_extend(spec, source->reps[j], page.presentation);
    image = window_reduce(image, page.presentation, page.dimension);
    if (image.empty()) continue;
    if (!target)
      throw ConsistencyError("differential_matrix: image at " + spot(ts, tt) +
                             " does not lie in the target cell's span");
    std::vector<Int> coords;
    try {
      coords = target->class_coordinates(image);
    } catch (const ConsistencyError&) {
      throw ConsistencyError("differential_matrix: image at " + spot(ts, tt) +
                             " does not lie in the target cell's span");
    }
    out.set_column(j, coords);
  }
  return out;
}

Page turn_page(const Page& page, const DifferentialSpec& spec) {
  if (spec.r != page.r) throw ValidationError("turn_page: spec page does not match");
  require_valid(spec, page.presentation);
  const bool zero = spec.zero();
  const int r = page.r;

  Page next;
  next.r = r + 1;
  next.dimension = page.dimension;
  next.t_max = page.t_max;
  next.reliable_t_max = zero ? page.reliable_t_max : page.reliable_t_max - (r - 1);
  next.infinity = false;
  next.presentation = page.presentation;

  for (const auto& [key, mid] : page.cells) {
    const auto [s, t] = key;

    if (mid.unreliable || t > next.reliable_t_max) {
      Cell carried = mid;
      carried.unreliable = true;
      next.cells.emplace(key, std::move(carried));
      continue;
    }

    const std::size_t m = mid.group.class_count();
    IntMatrix d_out(0, 0);
    std::vector<Int> target_moduli;
    if (!zero && s - r >= -page.dimension) {
      // A stored-but-dead target still validates images through its chain;
      // its zero class count then leaves the kernel unconstrained.
      const Cell* target = page.stored_cell(s - r, t + r - 1);
      if (target) {
        d_out = differential_matrix(page, spec, s, t);
        target_moduli = target->moduli();
      }
    }
    IntMatrix d_in(m, 0);
    if (!zero && s + r <= 0 && t - r + 1 >= 0) {
      if (page.cell(s + r, t - r + 1)) d_in = differential_matrix(page, spec, s + r, t - r + 1);
    }

    Subquotient sub = subquotient(d_in, mid.moduli(), d_out, target_moduli);

    Cell cell;
    cell.s = s;
    cell.t = t;
    cell.e2_basis = mid.e2_basis;
    cell.group = sub.group;
    for (std::size_t c = 0; c < sub.group.class_count(); ++c) {
      Combo rep;
      for (std::size_t i = 0; i < m; ++i)
        if (sub.representatives.at(i, c) != 0)
          rep = combo_add(rep, combo_scaled(mid.reps[i], sub.representatives.at(i, c),
                                            page.presentation),
                          page.presentation);
      cell.reps.push_back(std::move(rep));
    }
    cell.coord_chain = mid.coord_chain;
    cell.coord_chain.push_back(sub.class_map);
    next.cells.emplace(key, std::move(cell));
  }
  return next;
}

Page run_to_infinity(const Page& page, std::vector<DifferentialSpec> specs) {
  std::sort(specs.begin(), specs.end(),
            [](const DifferentialSpec& a, const DifferentialSpec& b) { return a.r < b.r; });
  for (std::size_t i = 0; i < specs.size(); ++i) {
    require_valid(specs[i], page.presentation);
    if (i + 1 < specs.size() && specs[i].r == specs[i + 1].r)
      throw ValidationError("run_to_infinity: more than one differential for page r=" +
                            std::to_string(specs[i].r));
    if (specs[i].r > page.dimension && !specs[i].zero())
      throw ValidationError("run_to_infinity: nonzero differential at r=" +
                            std::to_string(specs[i].r) + " would leave the column window");
    if (specs[i].r < page.r && !specs[i].zero())
      throw ValidationError("run_to_infinity: differential below the starting page");
  }

  Page current = page;
  for (int r = page.r; r <= page.dimension; ++r) {
    auto it = std::find_if(specs.begin(), specs.end(),
                           [r](const DifferentialSpec& sp) { return sp.r == r; });
    current = turn_page(current, it == specs.end() ? DifferentialSpec::zero_spec(r) : *it);
  }
  current.infinity = true;
  return current;
}

std::vector<Int> class_product(const Page& page, const ClassRef& x, const ClassRef& y) {
  const Cell* cx = page.cell(x.s, x.t);
  const Cell* cy = page.cell(y.s, y.t);
  if (!cx || !cy || x.index >= cx->group.class_count() || y.index >= cy->group.class_count())
    throw ValidationError("class_product: no such class");
  const int ps = x.s + y.s;
  const int pt = x.t + y.t;

  Combo prod = combo_mul(cx->reps[x.index], cy->reps[y.index], page.presentation);
  prod = window_reduce(prod, page.presentation, page.dimension);
  if (ps < -page.dimension) return {};  // column window: such products vanish
  if (pt > page.t_max) {
    if (prod.empty()) return {};
    throw ValidationError("class_product: product row leaves the window");
  }

  const Cell* target = page.stored_cell(ps, pt);
  if (!target) {
    if (!prod.empty())
      throw ConsistencyError("class_product: nonzero product representative at empty cell " +
                             spot(ps, pt));
    return {};
  }
  return target->class_coordinates(prod);
}

ProductTable product_table(const Page& page) {
  ProductTable table;
  for (const auto& [k1, c1] : page.cells) {
    if (c1.empty() || c1.t > page.reliable_t_max) continue;
    for (const auto& [k2, c2] : page.cells) {
      if (c2.empty() || c2.t > page.reliable_t_max) continue;
      if (c1.t + c2.t > page.reliable_t_max) continue;
      for (std::size_t i = 0; i < c1.group.class_count(); ++i)
        for (std::size_t j = 0; j < c2.group.class_count(); ++j) {
          ClassRef x{c1.s, c1.t, i}, y{c2.s, c2.t, j};
          table.entries[{x, y}] = class_product(page, x, y);
        }
    }
  }
  return table;
}

ExtensionReport extension_report(const Page& einf, int total_degree) {
  if (!einf.infinity)
    throw ValidationError("extension_report: page is not stabilized");
  ExtensionReport report;
  report.total_degree = total_degree;
  for (int s = -einf.dimension; s <= 0; ++s) {
    int t = total_degree - s;
    if (t < 0) continue;
    if (t > einf.reliable_t_max)
      throw ValidationError("extension_report: total degree reaches the unreliable window");
    const Cell* c = einf.cell(s, t);
    if (!c) continue;
    ExtensionPiece piece;
    piece.s = s;
    piece.t = t;
    piece.group = c->group;
    for (const Combo& rep : c->reps)
      piece.basis.push_back(combo_to_string(rep, einf.presentation));
    report.pieces.push_back(std::move(piece));
  }
  bool torsion = std::any_of(report.pieces.begin(), report.pieces.end(),
                             [](const ExtensionPiece& p) { return !p.group.torsion.empty(); });
  report.ambiguous = report.pieces.size() > 1 || torsion;
  return report;
}

FGAbelianGroup assemble_total_degree(const Page& einf, int j) {
  if (!einf.infinity)
    throw ValidationError("assemble_total_degree: page is not stabilized");
  if (j < -einf.dimension) return {};
  if (j + einf.dimension > einf.reliable_t_max)
    throw ValidationError("assemble_total_degree: degree " + std::to_string(j) +
                          " reaches the unreliable window");
  FGAbelianGroup out;
  for (int s = -einf.dimension; s <= 0; ++s) {
    int t = j - s;
    if (t < 0) continue;
    const Cell* c = einf.cell(s, t);
    if (c) out = direct_sum(out, c->group);
  }
  return out;
}

}  // namespace loopss
