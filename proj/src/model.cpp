#include "loopss/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace loopss {

std::vector<GeneratorDecl> ManifoldModel::base_generators() const {
  std::vector<GeneratorDecl> out;
  for (const GeneratorDecl& g : presentation.generators)
    if (g.column < 0) out.push_back(g);
  return out;
}

std::vector<GeneratorDecl> ManifoldModel::fiber_generators() const {
  std::vector<GeneratorDecl> out;
  for (const GeneratorDecl& g : presentation.generators)
    if (g.column == 0) out.push_back(g);
  return out;
}

namespace {

Monomial single(const AlgebraPresentation& p, std::size_t idx, int e) {
  Monomial m = p.unit();
  m.exponents[idx] = e;
  return m;
}

}  // namespace

ManifoldModel sphere_model(int n) {
  if (n < 2)
    throw ValidationError(
        "sphere_model: n must be >= 2; the circle is closed-form, use circle_loop_homology");
  ManifoldModel m;
  m.name = "sphere:" + std::to_string(n);
  m.dimension = n;
  m.presentation.generators = {
      GeneratorDecl{"a", -n, 0, GenKind::exterior},
      GeneratorDecl{"u", 0, n - 1, GenKind::polynomial},
  };
  if (n % 2 == 0) {
    m.presentation.relations.push_back(Relation{0, single(m.presentation, 0, 2)});
    DifferentialSpec spec;
    spec.r = n;
    Monomial au2 = m.presentation.unit();
    au2.exponents[0] = 1;
    au2.exponents[1] = 2;
    Combo target;
    combo_add_term(target, 2, au2, m.presentation);
    spec.assignments["u"] = std::move(target);
    m.differentials.push_back(std::move(spec));
  }
  return m;
}

ManifoldModel cpn_model(int n) {
  if (n < 1) throw ValidationError("cpn_model: n must be >= 1");
  ManifoldModel m;
  m.name = "cpn:" + std::to_string(n);
  m.dimension = 2 * n;
  m.presentation.generators = {
      GeneratorDecl{"c", -2, 0, GenKind::polynomial},
      GeneratorDecl{"y", 0, 1, GenKind::exterior},
      GeneratorDecl{"u", 0, 2 * n, GenKind::polynomial},
  };
  m.presentation.relations.push_back(Relation{0, single(m.presentation, 0, n + 1)});
  DifferentialSpec spec;
  spec.r = 2 * n;
  Monomial cnu = m.presentation.unit();
  cnu.exponents[0] = n;
  cnu.exponents[2] = 1;
  Combo target;
  combo_add_term(target, n + 1, cnu, m.presentation);
  spec.assignments["y"] = std::move(target);
  m.differentials.push_back(std::move(spec));
  return m;
}

AlgebraPresentation circle_loop_homology() {
  AlgebraPresentation p;
  p.generators = {
      GeneratorDecl{"a", -1, 0, GenKind::exterior},
      GeneratorDecl{"t", 0, 0, GenKind::laurent},
  };
  return p;
}

CircleDegreePiece circle_total_degree_piece(int degree) {
  CircleDegreePiece piece;
  piece.degree = degree;
  if (degree == 0) {
    piece.zero = false;
    piece.description = "free, countable basis indexed by k";
    piece.basis_pattern = "t^k";
  } else if (degree == -1) {
    piece.zero = false;
    piece.description = "free, countable basis indexed by k";
    piece.basis_pattern = "a^1*t^k";
  } else {
    piece.zero = true;
    piece.description = "zero";
  }
  return piece;
}

namespace {

struct LineScanner {
  const std::string& line;
  int lineno;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("line " + std::to_string(lineno) + ": " + msg);
  }
  void skip_ws() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return line.substr(start, pos - start);
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start]))))
      fail("expected an integer");
    return Int(line.substr(start, pos - start));
  }
  int small_integer() {
    Int v = integer();
    if (v > 1000000 || v < -1000000) fail("integer out of range");
    return static_cast<int>(v);
  }
  std::string rest() {
    skip_ws();
    std::string out = line.substr(pos);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    pos = line.size();
    return out;
  }
};

GenKind parse_kind(LineScanner& sc, bool fiber) {
  std::string word = sc.ident();
  if (word == "exterior") return GenKind::exterior;
  if (word == "polynomial") return GenKind::polynomial;
  if (word == "laurent" && fiber) return GenKind::laurent;
  sc.fail("unknown generator kind '" + word + "'");
}

}  // namespace

ManifoldModel custom_model_parse(const std::string& text, const std::string& display_name) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      lines.push_back(line);
    }
  }

  ManifoldModel model;
  model.name = display_name;
  bool have_dim = false;

  struct Deferred {
    int lineno;
    std::string keyword;
    std::string body;
  };
  std::vector<Deferred> deferred;

  // First pass: dim and generator declarations, in file order.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    LineScanner sc{lines[i], static_cast<int>(i + 1)};
    if (sc.done()) continue;
    std::string keyword = sc.ident();
    if (keyword == "dim") {
      if (have_dim) sc.fail("duplicate dim");
      model.dimension = sc.small_integer();
      if (model.dimension < 1) sc.fail("dim must be positive");
      have_dim = true;
      if (!sc.done()) sc.fail("trailing input after dim");
    } else if (keyword == "base" || keyword == "fiber") {
      GeneratorDecl g;
      g.name = sc.ident();
      sc.expect('(');
      g.column = sc.small_integer();
      sc.expect(',');
      g.row = sc.small_integer();
      sc.expect(')');
      g.kind = parse_kind(sc, keyword == "fiber");
      if (!sc.done()) sc.fail("trailing input after generator declaration");
      if (keyword == "fiber" && g.column != 0) sc.fail("fiber generators sit in column 0");
      if (keyword == "base" && g.column >= 0) sc.fail("base generators need a negative column");
      if (model.presentation.generator_index(g.name))
        sc.fail("duplicate generator '" + g.name + "'");
      model.presentation.generators.push_back(std::move(g));
    } else if (keyword == "rel" || keyword == "diff") {
      LineScanner probe{lines[i], static_cast<int>(i + 1)};
      probe.ident();
      deferred.push_back({static_cast<int>(i + 1), keyword, probe.rest()});
    } else {
      sc.fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!have_dim) throw ValidationError("model is missing a dim line");

  // Second pass: relations and differentials against the full generator list.
  std::map<int, DifferentialSpec> diff_by_page;
  for (const Deferred& item : deferred) {
    LineScanner sc{item.body, item.lineno};
    if (item.keyword == "rel") {
      Relation rel;
      rel.coefficient = sc.integer();
      if (rel.coefficient < 0) sc.fail("relation coefficient must be >= 0");
      std::string mono = sc.rest();
      if (mono.empty()) sc.fail("relation is missing its monomial");
      try {
        rel.monomial = parse_monomial(mono, model.presentation);
      } catch (const ValidationError& e) {
        sc.fail(e.what());
      }
      model.presentation.relations.push_back(std::move(rel));
    } else {
      std::string r_word = sc.ident();
      if (r_word != "r") sc.fail("expected r=<page>");
      sc.expect('=');
      int r = sc.small_integer();
      if (r < 2) sc.fail("differential page must be >= 2");
      std::string d_word = sc.ident();
      if (d_word != "d") sc.fail("expected d(<generator>)");
      sc.expect('(');
      std::string gen = sc.ident();
      sc.expect(')');
      sc.expect('=');
      Int coef = sc.integer();
      std::string mono_text = sc.rest();
      if (mono_text.empty()) sc.fail("differential is missing its monomial");
      if (!model.presentation.generator_index(gen))
        sc.fail("unknown generator '" + gen + "'");
      Monomial mono;
      try {
        mono = parse_monomial(mono_text, model.presentation);
      } catch (const ValidationError& e) {
        sc.fail(e.what());
      }
      DifferentialSpec& spec = diff_by_page[r];
      spec.r = r;
      combo_add_term(spec.assignments[gen], coef, mono, model.presentation);
    }
  }
  for (auto& [r, spec] : diff_by_page) model.differentials.push_back(std::move(spec));

  require_valid(model.presentation, model.dimension);
  for (const DifferentialSpec& spec : model.differentials)
    require_valid(spec, model.presentation);
  return model;
}

ManifoldModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return custom_model_parse(buf.str(), "custom:" + path);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string model_to_text(const ManifoldModel& model) {
  std::ostringstream os;
  os << "dim " << model.dimension << "\n";
  for (const GeneratorDecl& g : model.presentation.generators) {
    os << (g.column < 0 ? "base " : "fiber ") << g.name << " (" << g.column << "," << g.row
       << ") " << to_string(g.kind) << "\n";
  }
  for (const Relation& rel : model.presentation.relations)
    os << "rel " << rel.coefficient << " " << monomial_to_string(rel.monomial, model.presentation)
       << "\n";
  for (const DifferentialSpec& spec : model.differentials)
    for (const auto& [gen, combo] : spec.assignments)
      for (const auto& [mono, coef] : combo)
        os << "diff r=" << spec.r << " d(" << gen << ") = " << coef << " "
           << monomial_to_string(mono, model.presentation) << "\n";
  return os.str();
}

Page initial_page(const ManifoldModel& model, int t_max) {
  return build_initial_page(model.presentation, model.dimension, t_max);
}

Page infinity_page(const ManifoldModel& model, int t_max) {
  return run_to_infinity(initial_page(model, t_max), model.differentials);
}

std::vector<Page> pages_through(const ManifoldModel& model, int t_max, int r_max) {
  if (r_max < 2) throw ValidationError("pages_through: r_max must be >= 2");
  std::vector<Page> pages;
  pages.push_back(initial_page(model, t_max));
  while (pages.back().r < r_max) {
    const Page& cur = pages.back();
    const DifferentialSpec* spec = spec_at(model, cur.r);
    Page next = turn_page(cur, spec ? *spec : DifferentialSpec::zero_spec(cur.r));
    next.infinity = next.r > model.dimension;
    pages.push_back(std::move(next));
  }
  pages.back().infinity = pages.back().r > model.dimension;
  return pages;
}

const DifferentialSpec* spec_at(const ManifoldModel& model, int r) {
  for (const DifferentialSpec& spec : model.differentials)
    if (spec.r == r) return &spec;
  return nullptr;
}

namespace {

AlgebraPresentation theorem2_odd_presentation(int n) {
  AlgebraPresentation p;
  p.generators = {
      GeneratorDecl{"a", -n, 0, GenKind::exterior},
      GeneratorDecl{"u", 0, n - 1, GenKind::polynomial},
  };
  if (n % 2 == 0) {
    Monomial sq = p.unit();
    sq.exponents[0] = 2;
    p.relations.push_back(Relation{0, sq});
  }
  return p;
}

AlgebraPresentation theorem2_even_presentation(int n) {
  if (n % 2 != 0)
    throw ValidationError("theorem2-even: n must be even");
  AlgebraPresentation p;
  p.generators = {
      GeneratorDecl{"a", -n, 0, GenKind::polynomial},
      GeneratorDecl{"b", -n, n - 1, GenKind::exterior},
      GeneratorDecl{"v", 0, 2 * n - 2, GenKind::polynomial},
  };
  Monomial a2 = p.unit(), ab = p.unit(), av = p.unit();
  a2.exponents[0] = 2;
  ab.exponents[0] = 1;
  ab.exponents[1] = 1;
  av.exponents[0] = 1;
  av.exponents[2] = 1;
  p.relations.push_back(Relation{0, a2});
  p.relations.push_back(Relation{0, ab});
  p.relations.push_back(Relation{2, av});
  return p;
}

AlgebraPresentation theorem3_presentation(int n) {
  AlgebraPresentation p;
  p.generators = {
      GeneratorDecl{"c", -2, 0, GenKind::polynomial},
      GeneratorDecl{"w", -2, 1, GenKind::exterior},
      GeneratorDecl{"u", 0, 2 * n, GenKind::polynomial},
  };
  Monomial cn1 = p.unit(), cnu = p.unit(), wcn = p.unit();
  cn1.exponents[0] = n + 1;
  cnu.exponents[0] = n;
  cnu.exponents[2] = 1;
  wcn.exponents[0] = n;
  wcn.exponents[1] = 1;
  p.relations.push_back(Relation{0, cn1});
  p.relations.push_back(Relation{Int(n + 1), cnu});
  p.relations.push_back(Relation{0, wcn});
  return p;
}

std::string normalize_expect_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (name == "theorem2-odd-form") return "theorem2-odd";
  return name;
}

}  // namespace

std::vector<std::string> expected_presentation_names() {
  return {"theorem2", "theorem2-odd", "theorem2-even", "theorem3", "circle"};
}

std::string expected_presentation_text(const std::string& name, int n) {
  std::string key = normalize_expect_name(name);
  ManifoldModel shell;
  if (key == "theorem2-odd") {
    shell.dimension = n;
    shell.presentation = theorem2_odd_presentation(n);
  } else if (key == "theorem2-even") {
    shell.dimension = n;
    shell.presentation = theorem2_even_presentation(n);
  } else if (key == "theorem2") {
    return expected_presentation_text(n % 2 == 0 ? "theorem2-even" : "theorem2-odd", n);
  } else if (key == "theorem3") {
    shell.dimension = 2 * n;
    shell.presentation = theorem3_presentation(n);
  } else if (key == "circle") {
    shell.dimension = 1;
    shell.presentation = circle_loop_homology();
  } else {
    throw ValidationError("unknown expected presentation '" + name + "'");
  }
  return model_to_text(shell);
}

PresentationCandidate expected_presentation(const std::string& name, const ManifoldModel& model,
                                            int degree_bound) {
  std::string key = normalize_expect_name(name);
  PresentationCandidate cand;
  cand.degree_bound = degree_bound;
  if (key == "theorem2")
    key = model.dimension % 2 == 0 ? "theorem2-even" : "theorem2-odd";
  cand.name = key;
  int n = model.dimension;
  if (key == "theorem3") {
    if (model.dimension % 2 != 0)
      throw ValidationError("theorem3 expects an even-dimensional model");
    n = model.dimension / 2;
  }
  ManifoldModel shell = custom_model_parse(expected_presentation_text(key, n), key);
  cand.presentation = std::move(shell.presentation);
  return cand;
}

namespace {

struct CandidateCell {
  std::vector<Monomial> monomials;  // class order: free first, then torsion
  std::vector<Int> moduli;          // aligned, 0 for free
  FGAbelianGroup group;
};

CandidateCell candidate_cell(const AlgebraPresentation& p, int s, int t) {
  CandidateCell cell;
  std::vector<Monomial> basis = enumerate_basis(p, s, t);
  std::vector<std::pair<Int, Monomial>> torsion;
  std::vector<Int> orders;
  for (const Monomial& m : basis) {
    Int k = torsion_modulus_of(m, p);
    orders.push_back(k);
    if (k == 0) {
      cell.monomials.push_back(m);
      cell.moduli.push_back(0);
    } else {
      torsion.emplace_back(k, m);
    }
  }
  std::sort(torsion.begin(), torsion.end());
  for (auto& [k, m] : torsion) {
    if (k == 1) continue;  // killed outright
    cell.monomials.push_back(m);
    cell.moduli.push_back(k);
  }
  cell.group = canonical_group(orders);
  return cell;
}

std::vector<Int> candidate_product_coords(const AlgebraPresentation& p, const Monomial& mx,
                                          const Monomial& my, const CandidateCell& target,
                                          int dimension) {
  std::vector<Int> coords(target.monomials.size(), Int(0));
  std::optional<Term> raw = monomial_mul(mx, my, p);
  if (!raw) return coords;
  auto [s, t] = bidegree_of(raw->mono, p);
  if (s < -dimension) return coords;  // column window
  Term reduced = normal_form_reduce(raw->coef, raw->mono, p);
  if (reduced.zero()) return coords;
  for (std::size_t i = 0; i < target.monomials.size(); ++i)
    if (target.monomials[i] == reduced.mono) {
      coords[i] = target.moduli[i] == 0 ? reduced.coef : mod_floor(reduced.coef, target.moduli[i]);
      return coords;
    }
  throw ConsistencyError("candidate product escaped its basis");
}

bool is_zero_vector(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

}  // namespace

MatchResult match_presentation(const Page& einf, const PresentationCandidate& cand) {
  if (cand.presentation.has_laurent())
    throw ValidationError("match_presentation: laurent candidates have no bigraded cells");
  require_valid(cand.presentation, einf.dimension);
  const int d = einf.dimension;
  const int bound = cand.degree_bound;
  if (bound + d > einf.reliable_t_max)
    throw ValidationError("match_presentation: degree bound " + std::to_string(bound) +
                          " exceeds the reliable window");

  MatchResult result;
  std::map<std::pair<int, int>, CandidateCell> cand_cells;
  auto fail_at = [&](int s, int t, const std::string& msg) {
    result.pass = false;
    result.has_location = true;
    result.s = s;
    result.t = t;
    std::ostringstream os;
    os << "mismatch at (" << s << "," << t << "): " << msg;
    result.message = os.str();
    return result;
  };

  // Cell-by-cell groups, most filtered column first, bottom up.
  for (int s = -d; s <= 0; ++s)
    for (int t = 0; s + t <= bound; ++t) {
      CandidateCell cc = candidate_cell(cand.presentation, s, t);
      const Cell* cell = einf.cell(s, t);
      FGAbelianGroup computed = cell ? cell->group : FGAbelianGroup{};
      if (!(cc.group == computed)) {
        std::ostringstream os;
        os << "expected " << cc.group.to_string() << " {";
        for (std::size_t i = 0; i < cc.monomials.size(); ++i)
          os << (i ? ", " : "") << monomial_to_string(cc.monomials[i], cand.presentation);
        os << "}, computed " << computed.to_string() << " {";
        if (cell)
          for (std::size_t i = 0; i < cell->reps.size(); ++i)
            os << (i ? ", " : "") << combo_to_string(cell->reps[i], einf.presentation);
        os << "}";
        return fail_at(s, t, os.str());
      }
      const auto chain_classes = static_cast<std::size_t>(std::count_if(
          cc.moduli.begin(), cc.moduli.end(), [](const Int& k) { return k > 1; }));
      if (cc.group.torsion.size() != chain_classes)
        return fail_at(s, t, "candidate torsion basis is not in invariant-factor form");
      cand_cells.emplace(std::make_pair(s, t), std::move(cc));
    }

  // Products of basis classes under the positional correspondence.
  for (const auto& [key1, cc1] : cand_cells) {
    if (cc1.monomials.empty()) continue;
    for (const auto& [key2, cc2] : cand_cells) {
      if (cc2.monomials.empty()) continue;
      const auto [s1, t1] = key1;
      const auto [s2, t2] = key2;
      if (s1 + t1 + s2 + t2 > bound) continue;
      const int ps = s1 + s2, pt = t1 + t2;
      std::vector<Int> zero_engine;
      const CandidateCell* target = nullptr;
      if (ps >= -d) {
        auto it = cand_cells.find({ps, pt});
        if (it != cand_cells.end()) target = &it->second;
      }
      for (std::size_t i = 0; i < cc1.monomials.size(); ++i)
        for (std::size_t j = 0; j < cc2.monomials.size(); ++j) {
          std::vector<Int> expected =
              target ? candidate_product_coords(cand.presentation, cc1.monomials[i],
                                                cc2.monomials[j], *target, d)
                     : std::vector<Int>{};
          std::vector<Int> computed = class_product(einf, ClassRef{s1, t1, i}, ClassRef{s2, t2, j});
          bool same = expected.size() == computed.size()
                          ? expected == computed
                          : is_zero_vector(expected) && is_zero_vector(computed);
          if (!same) {
            std::ostringstream os;
            os << monomial_to_string(cc1.monomials[i], cand.presentation) << " * "
               << monomial_to_string(cc2.monomials[j], cand.presentation) << " from ("
               << s1 << "," << t1 << ")x(" << s2 << "," << t2 << "): expected [";
            for (std::size_t q = 0; q < expected.size(); ++q)
              os << (q ? "," : "") << expected[q];
            os << "], computed [";
            for (std::size_t q = 0; q < computed.size(); ++q)
              os << (q ? "," : "") << computed[q];
            os << "]";
            return fail_at(ps, pt, "product " + os.str());
          }
        }
    }
  }

  result.pass = true;
  result.message = "PASS: " + (cand.name.empty() ? std::string("candidate") : cand.name) +
                   " matches through total degree " + std::to_string(bound);
  return result;
}

FGAbelianGroup ziller_reference(int n, int k) {
  if (n < 1 || k < 0) throw ValidationError("ziller_reference: need n >= 1, k >= 0");
  FGAbelianGroup g;
  g.rank = 1;
  if (k > 0 && k % (2 * n) == 0) g.torsion.push_back(n + 1);
  return g;
}

ZillerCheck ziller_crosscheck(const Page& einf, int n, int k_max) {
  ZillerCheck check;
  for (int k = 0; k <= k_max; ++k) {
    FGAbelianGroup computed = assemble_total_degree(einf, k - 2 * n);
    FGAbelianGroup reference = ziller_reference(n, k);
    Int computed_order = 1, reference_order = 1;
    for (const Int& t : computed.torsion) computed_order *= t;
    for (const Int& t : reference.torsion) reference_order *= t;
    if (computed.rank != reference.rank || computed_order != reference_order) {
      std::ostringstream os;
      os << "H_" << k << "(LCP^" << n << "): computed " << computed.to_string()
         << ", reference " << reference.to_string();
      check.pass = false;
      check.message = os.str();
      return check;
    }
  }
  check.pass = true;
  check.message = "rank and torsion order agree for k <= " + std::to_string(k_max);
  return check;
}

EquivalenceResult pages_equivalent(const Page& a, const Page& b) {
  EquivalenceResult res;
  if (a.dimension != b.dimension) {
    res.message = "window dimensions differ";
    return res;
  }
  const int bound = std::min(a.reliable_t_max, b.reliable_t_max);
  for (int s = -a.dimension; s <= 0; ++s)
    for (int t = 0; t <= bound; ++t) {
      const Cell* ca = a.cell(s, t);
      const Cell* cb = b.cell(s, t);
      FGAbelianGroup ga = ca ? ca->group : FGAbelianGroup{};
      FGAbelianGroup gb = cb ? cb->group : FGAbelianGroup{};
      if (!(ga == gb)) {
        std::ostringstream os;
        os << "groups differ at (" << s << "," << t << "): " << ga.to_string() << " vs "
           << gb.to_string();
        res.message = os.str();
        return res;
      }
    }
  for (const auto& [k1, c1] : a.cells) {
    if (c1.empty() || c1.t > bound) continue;
    for (const auto& [k2, c2] : a.cells) {
      if (c2.empty() || c2.t > bound) continue;
      if (c1.t + c2.t > bound) continue;
      for (std::size_t i = 0; i < c1.group.class_count(); ++i)
        for (std::size_t j = 0; j < c2.group.class_count(); ++j) {
          ClassRef x{c1.s, c1.t, i}, y{c2.s, c2.t, j};
          std::vector<Int> pa = class_product(a, x, y);
          std::vector<Int> pb = class_product(b, x, y);
          if (pa != pb) {
            std::ostringstream os;
            os << "products differ at (" << c1.s << "," << c1.t << ")x(" << c2.s << ","
               << c2.t << ") classes " << i << "," << j;
            res.message = os.str();
            return res;
          }
        }
    }
  }
  res.equal = true;
  res.message = "pages agree on groups and products through t <= " + std::to_string(bound);
  return res;
}

}  // namespace loopss
