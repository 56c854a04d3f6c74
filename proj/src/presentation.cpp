#include "loopss/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace loopss {

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::exterior: return "exterior";
    case GenKind::polynomial: return "polynomial";
    case GenKind::laurent: return "laurent";
  }
  return "?";
}

bool Monomial::is_unit() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

std::optional<std::size_t> AlgebraPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return i;
  return std::nullopt;
}

bool AlgebraPresentation::has_laurent() const {
  return std::any_of(generators.begin(), generators.end(),
                     [](const GeneratorDecl& g) { return g.kind == GenKind::laurent; });
}

bool divides(const Monomial& divisor, const Monomial& m) {
  for (std::size_t i = 0; i < divisor.exponents.size(); ++i)
    if (divisor.exponents[i] > m.exponents[i]) return false;
  return true;
}

Int torsion_modulus_of(const Monomial& m, const AlgebraPresentation& p) {
  Int g = 0;
  for (const Relation& rel : p.relations) {
    if (rel.truncation() || !divides(rel.monomial, m)) continue;
    g = boost::multiprecision::gcd(g, rel.coefficient);
  }
  return g;
}

namespace {

bool killed_by_truncation(const Monomial& m, const AlgebraPresentation& p) {
  for (const Relation& rel : p.relations)
    if (rel.truncation() && divides(rel.monomial, m)) return true;
  return false;
}

}  // namespace

std::optional<Term> monomial_mul(const Monomial& m1, const Monomial& m2,
                                 const AlgebraPresentation& p) {
  const std::size_t n = p.generators.size();
  Monomial out{std::vector<int>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    int e = m1.exponents[i] + m2.exponents[i];
    if (p.generators[i].kind == GenKind::exterior && e > 1) return std::nullopt;
    out.exponents[i] = e;
  }
  if (killed_by_truncation(out, p)) return std::nullopt;
  // Koszul sign: each odd letter of m2 moves left past the odd letters of m1
  // belonging to later generators. Same-generator pairs contribute nothing.
  long swaps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.generators[i].odd() || m2.exponents[i] % 2 == 0) continue;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.generators[j].odd() && m1.exponents[j] % 2 != 0) ++swaps;
  }
  return Term{swaps % 2 == 0 ? Int(1) : Int(-1), std::move(out)};
}

Term normal_form_reduce(const Int& coef, const Monomial& m, const AlgebraPresentation& p) {
  if (killed_by_truncation(m, p)) return Term{0, m};
  Int g = torsion_modulus_of(m, p);
  if (g == 0) return Term{coef, m};
  return Term{mod_floor(coef, g), m};
}

std::pair<int, int> bidegree_of(const Monomial& m, const AlgebraPresentation& p) {
  int s = 0, t = 0;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    s += m.exponents[i] * p.generators[i].column;
    t += m.exponents[i] * p.generators[i].row;
  }
  return {s, t};
}

int total_degree_of(const Monomial& m, const AlgebraPresentation& p) {
  auto [s, t] = bidegree_of(m, p);
  return s + t;
}

bool odd_degree(const Monomial& m, const AlgebraPresentation& p) {
  return ((total_degree_of(m, p) % 2) + 2) % 2 == 1;
}

namespace {

void enumerate_rec(const AlgebraPresentation& p, int s, int t, std::size_t i, Monomial& cur,
                   int cur_s, int cur_t, std::vector<Monomial>& out) {
  if (i == p.generators.size()) {
    if (cur_s == s && cur_t == t && !killed_by_truncation(cur, p)) out.push_back(cur);
    return;
  }
  const GeneratorDecl& g = p.generators[i];
  int max_e;
  if (g.kind == GenKind::exterior) {
    max_e = 1;
  } else if (g.row > 0) {
    max_e = (t - cur_t) / g.row;
  } else {
    // row == 0 forces column < 0 (validated), so the column budget bounds e.
    max_e = (s - cur_s) / g.column;
  }
  for (int e = 0; e <= max_e; ++e) {
    int ns = cur_s + e * g.column;
    int nt = cur_t + e * g.row;
    if (nt > t || ns < s) break;  // rows only grow, columns only shrink
    cur.exponents[i] = e;
    enumerate_rec(p, s, t, i + 1, cur, ns, nt, out);
  }
  cur.exponents[i] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_basis(const AlgebraPresentation& p, int s, int t) {
  if (p.has_laurent())
    throw ValidationError("enumerate_basis: laurent generators have no finite basis");
  if (s > 0 || t < 0) return {};
  std::vector<Monomial> out;
  Monomial cur = p.unit();
  enumerate_rec(p, s, t, 0, cur, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> validate_presentation(const AlgebraPresentation& p,
                                               std::optional<int> dimension) {
  std::vector<std::string> diag;
  auto complain = [&diag](std::size_t idx, const std::string& what, const std::string& msg) {
    std::ostringstream os;
    os << what << " " << idx << ": " << msg;
    diag.push_back(os.str());
  };

  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const GeneratorDecl& g = p.generators[i];
    if (g.name.empty() || (!std::isalpha(static_cast<unsigned char>(g.name[0])) && g.name[0] != '_'))
      complain(i, "generator", "name '" + g.name + "' is not an identifier");
    for (char c : g.name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        complain(i, "generator", "name '" + g.name + "' is not an identifier");
    for (std::size_t j = i + 1; j < p.generators.size(); ++j)
      if (p.generators[j].name == g.name)
        complain(j, "generator", "duplicate name '" + g.name + "'");
    if (g.column > 0) complain(i, "generator", "column degree must be <= 0");
    if (g.row < 0) complain(i, "generator", "row degree must be >= 0");
    if (dimension && g.column < -*dimension)
      complain(i, "generator", "column degree below -dim");
    if (g.kind == GenKind::laurent) {
      if (g.total_degree() != 0) complain(i, "generator", "laurent generator must have total degree 0");
    } else if (g.column == 0 && g.row == 0) {
      complain(i, "generator", "total bidegree (0,0) is reserved for the unit");
    }
    if (g.kind == GenKind::exterior && !g.odd()) {
      // Needs an explicit square-zero truncation to be a legal exterior kind.
      Monomial sq{std::vector<int>(p.generators.size(), 0)};
      sq.exponents[i] = 2;
      bool truncated = false;
      for (const Relation& rel : p.relations)
        if (rel.truncation() && divides(rel.monomial, sq)) truncated = true;
      if (!truncated)
        complain(i, "generator",
                 "even-degree exterior generator '" + g.name + "' lacks a square-zero relation");
    }
  }

  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const Relation& rel = p.relations[i];
    if (rel.monomial.exponents.size() != p.generators.size()) {
      complain(i, "relation", "monomial width mismatch");
      continue;
    }
    if (rel.coefficient < 0) complain(i, "relation", "coefficient must be >= 0");
    if (rel.coefficient == 1) complain(i, "relation", "coefficient 1 kills the monomial; use 0");
    if (rel.monomial.is_unit()) complain(i, "relation", "relation on the unit monomial");
    for (std::size_t j = 0; j < rel.monomial.exponents.size(); ++j) {
      int e = rel.monomial.exponents[j];
      if (e < 0) complain(i, "relation", "negative exponent");
      if (e > 1 && p.generators[j].kind == GenKind::exterior) {
        // exterior square inside a relation monomial is only legal as the
        // truncation that licenses an even-degree exterior generator
        if (!(rel.truncation() && e == 2)) complain(i, "relation", "exterior exponent above 1");
      }
    }
    // Normal form: no *other* truncation may kill the relation monomial.
    for (std::size_t j = 0; j < p.relations.size(); ++j) {
      if (j == i || !p.relations[j].truncation()) continue;
      if (divides(p.relations[j].monomial, rel.monomial))
        complain(i, "relation", "monomial is not in normal form (killed by relation " +
                                    std::to_string(j) + ")");
    }
  }
  return diag;
}

void require_valid(const AlgebraPresentation& p, std::optional<int> dimension) {
  std::vector<std::string> diag = validate_presentation(p, dimension);
  if (diag.empty()) return;
  std::string msg = "invalid presentation:";
  for (const std::string& d : diag) msg += "\n  " + d;
  throw ValidationError(msg);
}

void combo_add_term(Combo& c, const Int& coef, const Monomial& m, const AlgebraPresentation& p) {
  Term t = normal_form_reduce(coef, m, p);
  if (t.zero()) return;
  auto it = c.find(t.mono);
  Int next = (it == c.end() ? Int(0) : it->second) + t.coef;
  Term r = normal_form_reduce(next, t.mono, p);
  if (r.zero())
    c.erase(t.mono);
  else
    c[t.mono] = r.coef;
}

Combo combo_mul(const Combo& lhs, const Combo& rhs, const AlgebraPresentation& p) {
  Combo out;
  for (const auto& [m1, c1] : lhs)
    for (const auto& [m2, c2] : rhs) {
      std::optional<Term> t = monomial_mul(m1, m2, p);
      if (!t) continue;
      combo_add_term(out, c1 * c2 * t->coef, t->mono, p);
    }
  return out;
}

Combo combo_scaled(const Combo& c, const Int& k, const AlgebraPresentation& p) {
  Combo out;
  for (const auto& [m, v] : c) combo_add_term(out, v * k, m, p);
  return out;
}

Combo combo_add(const Combo& lhs, const Combo& rhs, const AlgebraPresentation& p) {
  Combo out = lhs;
  for (const auto& [m, v] : rhs) combo_add_term(out, v, m, p);
  return out;
}

std::string monomial_to_string(const Monomial& m, const AlgebraPresentation& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    os << (first ? "" : "*") << p.generators[i].name << "^" << m.exponents[i];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string combo_to_string(const Combo& c, const AlgebraPresentation& p) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, coef] : c) {
    Int a = coef;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1 || m.is_unit()) {
      os << a;
      if (!m.is_unit()) os << "*";
    }
    if (!m.is_unit()) os << monomial_to_string(m, p);
    first = false;
  }
  return os.str();
}

Monomial parse_monomial(const std::string& text, const AlgebraPresentation& p) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  Monomial out = p.unit();
  if (compact.empty()) throw ValidationError("empty monomial");
  if (compact == "1") return out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t star = compact.find('*', pos);
    std::string factor = compact.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    std::size_t caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(factor.substr(caret + 1));
      } catch (const std::exception&) {
        throw ValidationError("bad exponent in monomial factor '" + factor + "'");
      }
    }
    std::optional<std::size_t> idx = p.generator_index(name);
    if (!idx) throw ValidationError("unknown generator '" + name + "'");
    out.exponents[*idx] += exp;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return out;
}

}  // namespace loopss
