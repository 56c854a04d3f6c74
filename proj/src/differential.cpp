#include "loopss/differential.hpp"

#include <sstream>

namespace loopss {

bool DifferentialSpec::zero() const {
  for (const auto& [name, combo] : assignments)
    if (!combo.empty()) return false;
  return true;
}

std::vector<std::string> validate_spec(const DifferentialSpec& spec,
                                       const AlgebraPresentation& p) {
  std::vector<std::string> diag;
  if (spec.r < 2) diag.push_back("differential: page index must be >= 2");
  for (const auto& [name, combo] : spec.assignments) {
    std::optional<std::size_t> idx = p.generator_index(name);
    if (!idx) {
      diag.push_back("differential: unknown generator '" + name + "'");
      continue;
    }
    const GeneratorDecl& g = p.generators[*idx];
    if (g.kind == GenKind::laurent && !combo.empty()) {
      diag.push_back("differential: laurent generator '" + name + "' must have zero differential");
      continue;
    }
    for (const auto& [mono, coef] : combo) {
      auto [s, t] = bidegree_of(mono, p);
      if (s != g.column - spec.r || t != g.row + spec.r - 1) {
        std::ostringstream os;
        os << "differential: d(" << name << ") term " << monomial_to_string(mono, p)
           << " lies at (" << s << "," << t << "), expected (" << g.column - spec.r << ","
           << g.row + spec.r - 1 << ")";
        diag.push_back(os.str());
      }
    }
  }
  return diag;
}

void require_valid(const DifferentialSpec& spec, const AlgebraPresentation& p) {
  std::vector<std::string> diag = validate_spec(spec, p);
  if (diag.empty()) return;
  std::string msg = "invalid differential spec:";
  for (const std::string& d : diag) msg += "\n  " + d;
  throw ValidationError(msg);
}

Combo leibniz_extend(const DifferentialSpec& spec, const Monomial& m,
                     const AlgebraPresentation& p) {
  Combo result;
  if (spec.assignments.empty()) return result;
  const std::size_t n = p.generators.size();
  // Letters of the word in declaration order; laurent letters (degree 0,
  // zero differential) only ever contribute to prefixes and suffixes.
  for (std::size_t i = 0; i < n; ++i) {
    int e = m.exponents[i];
    if (e <= 0) continue;
    auto it = spec.assignments.find(p.generators[i].name);
    if (it == spec.assignments.end() || it->second.empty()) continue;

    // prefix: generators before i, plus j copies of g_i for each position.
    Monomial prefix = p.unit();
    int prefix_degree = 0;
    for (std::size_t j = 0; j < i; ++j) {
      prefix.exponents[j] = m.exponents[j];
      prefix_degree += m.exponents[j] * p.generators[j].total_degree();
    }
    for (int pos = 0; pos < e; ++pos) {
      Monomial suffix = p.unit();
      suffix.exponents[i] = e - 1 - pos;
      for (std::size_t j = i + 1; j < n; ++j) suffix.exponents[j] = m.exponents[j];

      int sign_parity = (prefix_degree % 2 + 2) % 2;
      for (const auto& [target, coef] : it->second) {
        std::optional<Term> left = monomial_mul(prefix, target, p);
        if (!left) continue;
        std::optional<Term> full = monomial_mul(left->mono, suffix, p);
        if (!full) continue;
        Int c = coef * left->coef * full->coef;
        if (sign_parity) c = -c;
        combo_add_term(result, c, full->mono, p);
      }
      prefix.exponents[i] += 1;
      prefix_degree += p.generators[i].total_degree();
    }
  }
  return result;
}

Combo leibniz_extend(const DifferentialSpec& spec, const Combo& c,
                     const AlgebraPresentation& p) {
  Combo result;
  for (const auto& [mono, coef] : c) {
    Combo d = leibniz_extend(spec, mono, p);
    for (const auto& [m2, c2] : d) combo_add_term(result, coef * c2, m2, p);
  }
  return result;
}

}  // namespace loopss
