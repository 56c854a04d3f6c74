#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopss/presentation.hpp"

namespace loopss {

/// Page-r differential datum: the value of d_r on each generator (absent
/// means zero), extended to everything by the graded Leibniz rule.
struct DifferentialSpec {
  int r = 2;
  std::map<std::string, Combo> assignments;

  bool zero() const;
  static DifferentialSpec zero_spec(int r) { return DifferentialSpec{r, {}}; }
};

/// Diagnostics: every assigned target must sit in bidegree
/// (s - r, t + r - 1) relative to its generator, laurent generators carry
/// no assignment, r >= 2.
std::vector<std::string> validate_spec(const DifferentialSpec& spec,
                                       const AlgebraPresentation& p);
void require_valid(const DifferentialSpec& spec, const AlgebraPresentation& p);

/// d(g1^e1 ... gk^ek) by the graded Leibniz rule: expand over the letters of
/// the word, sign (-1)^(total degree of the prefix) at each position, then
/// normal-form reduce.
Combo leibniz_extend(const DifferentialSpec& spec, const Monomial& m,
                     const AlgebraPresentation& p);
Combo leibniz_extend(const DifferentialSpec& spec, const Combo& c,
                     const AlgebraPresentation& p);

}  // namespace loopss
