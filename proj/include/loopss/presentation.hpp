#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopss/int_matrix.hpp"

namespace loopss {

enum class GenKind { exterior, polynomial, laurent };

std::string to_string(GenKind kind);

/// A bigraded generator. `column` is the (nonpositive) filtration degree,
/// `row` the fiber degree; signs are governed by the parity of column + row.
struct GeneratorDecl {
  std::string name;
  int column = 0;
  int row = 0;
  GenKind kind = GenKind::polynomial;

  int total_degree() const { return column + row; }
  bool odd() const { return (total_degree() % 2 + 2) % 2 == 1; }
  bool operator==(const GeneratorDecl&) const = default;
};

/// Exponent vector over the declared generators, in declaration order.
/// The empty/all-zero vector is the unit monomial. Laurent generators may
/// carry negative exponents; all others are nonnegative and exterior ones
/// stay within {0, 1}.
struct Monomial {
  std::vector<int> exponents;

  bool is_unit() const;
  auto operator<=>(const Monomial&) const = default;
};

/// coefficient == 0 marks "monomial is zero" (truncation, e.g. c^{n+1});
/// coefficient k >= 2 means k * monomial = 0 (torsion, e.g. 2av).
struct Relation {
  Int coefficient;
  Monomial monomial;
  bool truncation() const { return coefficient == 0; }
};

/// Finitely presented bigraded-commutative algebra over Z with
/// monomial-torsion relations only.
struct AlgebraPresentation {
  std::vector<GeneratorDecl> generators;
  std::vector<Relation> relations;

  Monomial unit() const { return Monomial{std::vector<int>(generators.size(), 0)}; }
  std::optional<std::size_t> generator_index(const std::string& name) const;
  bool has_laurent() const;
};

/// One signed term; coef == 0 encodes the zero term.
struct Term {
  Int coef;
  Monomial mono;
  bool zero() const { return coef == 0; }
};

/// Integer combination of monomials, keyed in exponent-lex order.
using Combo = std::map<Monomial, Int>;

/// Product of monomials with the Koszul sign: interleaving the two words
/// into declaration order picks up (-1) per transposed pair of odd-degree
/// letters of distinct generators. Returns nullopt for zero (an exterior
/// square, or a truncation relation dividing the product).
std::optional<Term> monomial_mul(const Monomial& m1, const Monomial& m2,
                                 const AlgebraPresentation& p);

/// Reduce a term modulo the monomial-torsion ideal: zero if a truncation
/// monomial divides, otherwise the coefficient mod the gcd of all applicable
/// torsion coefficients, representative in [0, gcd).
Term normal_form_reduce(const Int& coef, const Monomial& m, const AlgebraPresentation& p);

std::pair<int, int> bidegree_of(const Monomial& m, const AlgebraPresentation& p);
int total_degree_of(const Monomial& m, const AlgebraPresentation& p);
bool odd_degree(const Monomial& m, const AlgebraPresentation& p);

/// True when `divisor`'s exponents are componentwise <= m's.
bool divides(const Monomial& divisor, const Monomial& m);

/// 0 when no torsion relation divides m, else the gcd of their coefficients.
Int torsion_modulus_of(const Monomial& m, const AlgebraPresentation& p);

/// All normal-form monomials of bidegree exactly (s, t), graded-lex ordered.
/// Rejects presentations with laurent generators (infinite bases).
std::vector<Monomial> enumerate_basis(const AlgebraPresentation& p, int s, int t);

/// Diagnostics, one line per violation; empty means the presentation is
/// valid. When `dimension` is supplied, generator columns must lie in
/// [-dimension, 0].
std::vector<std::string> validate_presentation(const AlgebraPresentation& p,
                                               std::optional<int> dimension = std::nullopt);
/// Throwing form of the above.
void require_valid(const AlgebraPresentation& p, std::optional<int> dimension = std::nullopt);

// Combo arithmetic. All results are kept normal-form reduced.
void combo_add_term(Combo& c, const Int& coef, const Monomial& m, const AlgebraPresentation& p);
Combo combo_mul(const Combo& lhs, const Combo& rhs, const AlgebraPresentation& p);
Combo combo_scaled(const Combo& c, const Int& k, const AlgebraPresentation& p);
Combo combo_add(const Combo& lhs, const Combo& rhs, const AlgebraPresentation& p);

std::string monomial_to_string(const Monomial& m, const AlgebraPresentation& p);
std::string combo_to_string(const Combo& c, const AlgebraPresentation& p);

/// Parse a monomial in the model grammar, `g1^e1*g2^e2` (or `1`).
Monomial parse_monomial(const std::string& text, const AlgebraPresentation& p);

}  // namespace loopss
