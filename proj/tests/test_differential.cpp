#include <doctest.h>

#include "helpers.hpp"
#include "loopss/differential.hpp"
#include "loopss/model.hpp"

using namespace loopss;
using loopss::testing::random_monomial;

namespace {

Combo term(const AlgebraPresentation& p, const Int& coef, std::vector<int> exps) {
  Combo c;
  combo_add_term(c, coef, Monomial{std::move(exps)}, p);
  return c;
}

}  // namespace

TEST_CASE("even sphere: d(u^3) = 2 a u^4 with alternating internal signs") {
  ManifoldModel model = sphere_model(2);
  const DifferentialSpec& spec = model.differentials.front();
  Combo d = leibniz_extend(spec, Monomial{{0, 3}}, model.presentation);
  CHECK(d == term(model.presentation, 2, {1, 4}));
}

TEST_CASE("even sphere: d(u^2) = 0, signs cancel pairwise") {
  ManifoldModel model = sphere_model(2);
  Combo d = leibniz_extend(model.differentials.front(), Monomial{{0, 2}}, model.presentation);
  CHECK(d.empty());
}

TEST_CASE("even sphere: the odd/even power pattern holds along the column") {
  ManifoldModel model = sphere_model(4);
  const DifferentialSpec& spec = model.differentials.front();
  for (int k = 0; k <= 5; ++k) {
    Combo d = leibniz_extend(spec, Monomial{{0, k}}, model.presentation);
    if (k % 2 == 0)
      CHECK(d.empty());
    else
      CHECK(d == term(model.presentation, 2, {1, k + 1}));
  }
}

TEST_CASE("d(unit) = 0") {
  ManifoldModel model = sphere_model(2);
  CHECK(leibniz_extend(model.differentials.front(), model.presentation.unit(),
                       model.presentation)
            .empty());
}

TEST_CASE("CP^n: d(y u^k) = (n+1) c^n u^(k+1)") {
  for (int n : {1, 2, 3}) {
    ManifoldModel model = cpn_model(n);
    const DifferentialSpec& spec = model.differentials.front();
    Combo d = leibniz_extend(spec, Monomial{{0, 1, 2}}, model.presentation);
    std::vector<int> exps{n, 0, 3};
    CHECK(d == term(model.presentation, n + 1, exps));
    // and d vanishes once c-powers overflow the truncation
    Combo dead = leibniz_extend(spec, Monomial{{1, 1, 0}}, model.presentation);
    CHECK(dead.empty());
  }
}

TEST_CASE("differential specs validate bidegrees") {
  ManifoldModel model = sphere_model(2);
  CHECK(validate_spec(model.differentials.front(), model.presentation).empty());

  DifferentialSpec bad;
  bad.r = 3;  // d(u) term sits at (-2,2), a page-3 target must be at (-3,3)
  bad.assignments["u"] = term(model.presentation, 2, {1, 2});
  CHECK_FALSE(validate_spec(bad, model.presentation).empty());

  DifferentialSpec unknown;
  unknown.r = 2;
  unknown.assignments["q"] = term(model.presentation, 1, {1, 2});
  CHECK_FALSE(validate_spec(unknown, model.presentation).empty());
}

TEST_CASE("laurent generators cannot carry differentials") {
  AlgebraPresentation circle = circle_loop_homology();
  DifferentialSpec spec;
  spec.r = 2;
  Combo target;
  combo_add_term(target, 1, Monomial{{1, 0}}, circle);
  spec.assignments["t"] = target;
  CHECK_FALSE(validate_spec(spec, circle).empty());
}

TEST_CASE("Leibniz identity on random pairs, every built-in model") {
  std::mt19937_64 rng(1729);
  for (const ManifoldModel& model : loopss::testing::builtin_models()) {
    const AlgebraPresentation& p = model.presentation;
    DifferentialSpec spec =
        model.differentials.empty() ? DifferentialSpec::zero_spec(2) : model.differentials.front();
    for (int trial = 0; trial < 300; ++trial) {
      Monomial m1 = random_monomial(rng, p, 8);
      Monomial m2 = random_monomial(rng, p, 8);
      Combo product;
      auto prod = monomial_mul(m1, m2, p);
      if (prod) combo_add_term(product, prod->coef, prod->mono, p);
      Combo lhs = leibniz_extend(spec, product, p);

      Combo left = leibniz_extend(spec, m1, p);
      Combo m2_combo = term(p, 1, m2.exponents);
      Combo rhs = combo_mul(left, m2_combo, p);
      Combo right = leibniz_extend(spec, m2, p);
      Combo m1_combo = term(p, 1, m1.exponents);
      Combo cross = combo_mul(m1_combo, right, p);
      rhs = combo_add(rhs, combo_scaled(cross, odd_degree(m1, p) ? -1 : 1, p), p);
      CHECK(lhs == rhs);
    }
  }
}
