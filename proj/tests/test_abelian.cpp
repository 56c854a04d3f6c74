#include <doctest.h>

#include "helpers.hpp"
#include "loopss/abelian_group.hpp"

using namespace loopss;
using loopss::testing::random_matrix;
using loopss::testing::random_unimodular;

TEST_CASE("canonical_group folds cyclic orders into invariant factors") {
  FGAbelianGroup g = canonical_group({Int(2), Int(3), Int(0), Int(1)});
  CHECK(g.rank == 1);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 6);
  CHECK(g.to_string() == "Z + Z_6");
  CHECK(canonical_group({}).trivial());
}

TEST_CASE("homology_of_pair: zero maps on Z^3 give rank 3") {
  Subquotient h = homology_of_pair(IntMatrix(3, 0), IntMatrix(0, 3));
  CHECK(h.group == FGAbelianGroup{3, {}});
}

TEST_CASE("homology_of_pair: multiplication by 2 into a dead end gives Z_2") {
  // The even-sphere page turn in miniature: the surviving relation 2 * class.
  Subquotient h = homology_of_pair(IntMatrix{{2}}, IntMatrix(0, 1));
  CHECK(h.group == FGAbelianGroup{0, {Int(2)}});
  CHECK(h.class_map.apply({1}) == std::vector<Int>{1});
  CHECK(h.class_map.apply({2}) == std::vector<Int>{0});
}

TEST_CASE("homology_of_pair: multiplication by 3 gives Z_3") {
  Subquotient h = homology_of_pair(IntMatrix{{3}}, IntMatrix(0, 1));
  CHECK(h.group == FGAbelianGroup{0, {Int(3)}});
}

TEST_CASE("homology_of_pair: injective outgoing map kills everything") {
  Subquotient h = homology_of_pair(IntMatrix(1, 0), IntMatrix{{2}});
  CHECK(h.group.trivial());
}

TEST_CASE("homology_of_pair rejects non-complexes") {
  CHECK_THROWS_AS(homology_of_pair(IntMatrix{{1}}, IntMatrix{{1}}), ConsistencyError);
}

TEST_CASE("homology_of_pair exposes an explicit class matrix on free complexes") {
  IntMatrix d_out{{0, 0, 2}};
  Subquotient h = homology_of_pair(IntMatrix(3, 0), d_out);
  CHECK(h.class_map.has_matrix());
  IntMatrix q = h.class_map.matrix();
  for (std::size_t c = 0; c < h.representatives.cols(); ++c) {
    std::vector<Int> expected(h.group.class_count(), 0);
    expected[c] = 1;
    CHECK(q.apply(h.representatives.column(c)) == expected);
  }
}

TEST_CASE("class_map representatives map to unit coordinates") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix d_in = random_matrix(rng, 4);
    Subquotient h = homology_of_pair(d_in, IntMatrix(0, d_in.rows()));
    for (std::size_t c = 0; c < h.group.class_count(); ++c) {
      std::vector<Int> coords = h.class_map.apply(h.representatives.column(c));
      for (std::size_t i = 0; i < coords.size(); ++i) CHECK(coords[i] == (i == c ? 1 : 0));
    }
  }
}

TEST_CASE("homology is invariant under unimodular change of the middle basis") {
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 60; ++trial) {
    // d_in built on the kernel of a random d_out so that d_out * d_in = 0.
    IntMatrix d_out = random_matrix(rng, 4);
    const std::size_t m = d_out.cols();
    auto null = kernel_basis(d_out);
    std::uniform_int_distribution<int> coef(-2, 2);
    IntMatrix d_in(m, null.size() + 1);
    for (std::size_t j = 0; j < null.size(); ++j) {
      Int scale = coef(rng);
      for (std::size_t i = 0; i < m; ++i) d_in.at(i, j) = scale * null[j][i];
    }
    Subquotient base = homology_of_pair(d_in, d_out);

    auto [p, p_inv] = random_unimodular(rng, m);
    Subquotient other = homology_of_pair(p * d_in, d_out * p_inv);
    CHECK(base.group == other.group);
  }
}

TEST_CASE("subquotient with middle torsion reproduces the presented group") {
  // Middle Z + Z_4, no differentials: the turn is the identity.
  std::vector<Int> moduli{Int(0), Int(4)};
  Subquotient h = subquotient(IntMatrix(2, 0), moduli, IntMatrix(0, 0), {});
  CHECK(h.group == FGAbelianGroup{1, {Int(4)}});
  CHECK(h.representatives.at(0, 0) == 1);
  CHECK(h.representatives.at(1, 1) == 1);
}

TEST_CASE("subquotient detects maps that ignore middle torsion") {
  // d_out(e) = generator of Z, middle class of order 2: 2 * d_out(e) != 0.
  std::vector<Int> moduli{Int(2)};
  IntMatrix d_out{{1}};
  CHECK_THROWS_AS(subquotient(IntMatrix(1, 0), moduli, d_out, {Int(0)}), ConsistencyError);
}

TEST_CASE("subquotient accepts maps well-defined modulo target torsion") {
  // Z_2 -> Z_4 via multiplication by 2 is a real homomorphism; kernel Z_... :
  // cycles = {0, 2} in the lift, boundaries = middle torsion only.
  std::vector<Int> moduli{Int(2)};
  IntMatrix d_out{{2}};
  Subquotient h = subquotient(IntMatrix(1, 0), moduli, d_out, {Int(4)});
  CHECK(h.group.trivial());
}

TEST_CASE("direct_sum recanonicalizes") {
  FGAbelianGroup a{1, {Int(2)}};
  FGAbelianGroup b{0, {Int(3)}};
  FGAbelianGroup c = direct_sum(a, b);
  CHECK(c.rank == 1);
  REQUIRE(c.torsion.size() == 1);
  CHECK(c.torsion[0] == 6);
}
