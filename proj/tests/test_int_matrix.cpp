#include <doctest.h>

#include "helpers.hpp"
#include "loopss/int_matrix.hpp"

using namespace loopss;
using loopss::testing::minors_gcd;
using loopss::testing::random_matrix;

namespace {

void check_snf_contract(const IntMatrix& a, const SNFResult& snf) {
  CHECK(snf.U * a * snf.V == snf.D);
  Int du = snf.U.determinant();
  Int dv = snf.V.determinant();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  std::size_t n = std::min(snf.D.rows(), snf.D.cols());
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j) CHECK(snf.D.at(i, j) == 0);
  for (std::size_t i = 0; i < n; ++i) CHECK(snf.D.at(i, i) >= 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (snf.D.at(i + 1, i + 1) == 0) continue;
    CHECK(snf.D.at(i, i) != 0);
    CHECK(snf.D.at(i + 1, i + 1) % snf.D.at(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("snf: diag(2,3) has invariant factors 1, 6") {
  // Oracle: gcd of k x k minors; g1 = gcd(2,3) = 1, g2 = 6.
  IntMatrix a{{2, 0}, {0, 3}};
  SNFResult snf = smith_normal_form(a);
  check_snf_contract(a, snf);
  CHECK(snf.D.at(0, 0) == 1);
  CHECK(snf.D.at(1, 1) == 6);
}

TEST_CASE("snf: identity stays identity") {
  IntMatrix a = IntMatrix::identity(3);
  SNFResult snf = smith_normal_form(a);
  CHECK(snf.D == a);
  CHECK(snf.U == a);
  CHECK(snf.V == a);
}

TEST_CASE("snf: [[2,4],[6,8]] has invariant factors 2, 4") {
  // g1 = 2, g2 = |det| = 8, so the factors are 2 and 8/2 = 4.
  IntMatrix a{{2, 4}, {6, 8}};
  SNFResult snf = smith_normal_form(a);
  check_snf_contract(a, snf);
  CHECK(snf.D.at(0, 0) == 2);
  CHECK(snf.D.at(1, 1) == 4);
}

TEST_CASE("snf: zero-size matrices are legal") {
  SNFResult snf = smith_normal_form(IntMatrix(0, 0));
  CHECK(snf.D.rows() == 0);
  smith_normal_form(IntMatrix(0, 3));
  smith_normal_form(IntMatrix(3, 0));
}

TEST_CASE("kernel_basis: injective map has empty kernel") {
  CHECK(kernel_basis(IntMatrix{{2}}).empty());
}

TEST_CASE("kernel_basis: zero map has the full standard lattice") {
  auto basis = kernel_basis(IntMatrix(1, 3));
  CHECK(basis.size() == 3);
}

TEST_CASE("kernel_basis: [[1,1]] is generated by (1,-1) up to sign") {
  IntMatrix a{{1, 1}};
  auto basis = kernel_basis(a);
  REQUIRE(basis.size() == 1);
  const auto& v = basis[0];
  CHECK(v[0] + v[1] == 0);
  Int g = boost::multiprecision::gcd(v[0], v[1]);
  CHECK((g == 1 || g == -1));
  for (const Int& x : a.apply(v)) CHECK(x == 0);
}

TEST_CASE("snf properties on random matrices") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 250; ++trial) {
    IntMatrix a = random_matrix(rng, 6);
    SNFResult snf = smith_normal_form(a);
    check_snf_contract(a, snf);
  }
}

TEST_CASE("snf invariant factors match the gcd-of-minors oracle") {
  std::mt19937_64 rng(33550336);
  for (int trial = 0; trial < 120; ++trial) {
    IntMatrix a = random_matrix(rng, 4);
    SnfDecomposition snf = smith_decompose(a);
    Int product = 1;
    for (std::size_t k = 1; k <= snf.rank; ++k) {
      product *= snf.D.at(k - 1, k - 1);
      CHECK(minors_gcd(a, k) == product);
    }
    if (snf.rank < std::min(a.rows(), a.cols())) CHECK(minors_gcd(a, snf.rank + 1) == 0);
  }
}

TEST_CASE("snf is deterministic") {
  std::mt19937_64 rng(7);
  IntMatrix a = random_matrix(rng, 5);
  SNFResult first = smith_normal_form(a);
  SNFResult second = smith_normal_form(a);
  CHECK(first.U == second.U);
  CHECK(first.V == second.V);
  CHECK(first.D == second.D);
}

TEST_CASE("kernel vectors always solve A v = 0") {
  std::mt19937_64 rng(5040);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 5);
    for (const auto& v : kernel_basis(a))
      for (const Int& x : a.apply(v)) CHECK(x == 0);
  }
}

TEST_CASE("lattice solver round-trips members and rejects outsiders") {
  IntMatrix m{{2, 0}, {0, 3}, {0, 0}};
  LatticeSolver solver(m);
  std::vector<Int> c{4, -3, 0};
  CHECK(solver.contains(c));
  std::vector<Int> x = solver.solve(c);
  CHECK(m.apply(x) == c);
  CHECK_FALSE(solver.contains({1, 0, 0}));
  CHECK_FALSE(solver.contains({0, 0, 5}));
  CHECK_THROWS_AS(solver.solve({1, 0, 0}), ConsistencyError);
}
