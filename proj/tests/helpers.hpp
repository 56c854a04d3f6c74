#pragma once

#include <random>
#include <vector>

#include "loopss/model.hpp"
#include "loopss/page.hpp"

namespace loopss::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 6, int max_abs = 9) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
  return m;
}

/// Random unimodular matrix together with its inverse (elementary ops).
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n,
                                                         int ops = 8) {
  IntMatrix p = IntMatrix::identity(n);
  IntMatrix p_inv = IntMatrix::identity(n);
  if (n < 2) return {p, p_inv};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < ops; ++k) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int q = coef(rng);
    p.add_row(i, j, q);       // P := E P
    p_inv.add_col(j, i, -q);  // P^-1 := P^-1 E^-1
  }
  return {p, p_inv};
}

/// gcd of all k x k minors, by enumeration (test oracle).
inline Int minors_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  Int g = 0;

  auto choose = [](std::size_t n, std::size_t k, auto&& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
      visit(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  choose(a.rows(), k, [&](const std::vector<std::size_t>& ri) {
    choose(a.cols(), k, [&](const std::vector<std::size_t>& ci) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
      g = boost::multiprecision::gcd(g, sub.determinant());
    });
  });
  return g;
}

/// Random normal-form monomial with rows bounded by t_bound.
inline Monomial random_monomial(std::mt19937_64& rng, const AlgebraPresentation& p, int t_bound) {
  Monomial m = p.unit();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const GeneratorDecl& g = p.generators[i];
    int cap = 1;
    if (g.kind != GenKind::exterior) cap = g.row > 0 ? t_bound / g.row : 1;
    std::uniform_int_distribution<int> e(0, std::max(cap, 0));
    m.exponents[i] = e(rng);
  }
  return m;
}

inline std::vector<ManifoldModel> builtin_models() {
  return {sphere_model(2), sphere_model(3), sphere_model(4),
          cpn_model(1),    cpn_model(2),    cpn_model(3)};
}

}  // namespace loopss::testing
