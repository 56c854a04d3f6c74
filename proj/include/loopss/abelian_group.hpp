#pragma once

#include <string>
#include <vector>

#include "loopss/int_matrix.hpp"

namespace loopss {

/// Finitely generated abelian group in canonical form: free rank plus
/// torsion coefficients t1 | t2 | ..., all >= 2. Equality is structural.
struct FGAbelianGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::size_t class_count() const { return rank + torsion.size(); }
  /// Modulus per class in class order: 0 for each free class, then the
  /// torsion coefficients.
  std::vector<Int> moduli() const;

  bool operator==(const FGAbelianGroup& other) const = default;
  std::string to_string() const;  // "0", "Z", "Z^2 + Z_2 + Z_6", ...
};

/// Canonicalize an unordered list of cyclic orders (0 = infinite) into
/// (rank, divisibility-ordered torsion); order-1 factors vanish.
FGAbelianGroup canonical_group(const std::vector<Int>& cyclic_orders);

/// Direct sum, re-canonicalized.
FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

/// Linear map from cycle vectors in a middle lattice Z^m onto the class
/// coordinates of a subquotient. Torsion coordinates are reduced into
/// [0, modulus). Applying to a non-cycle raises ConsistencyError.
class ClassMap {
 public:
  ClassMap() = default;
  ClassMap(LatticeSolver cycle_solver, IntMatrix class_rows, std::vector<Int> moduli);

  std::size_t middle_dim() const { return cycle_solver_.matrix().rows(); }
  std::size_t class_count() const { return moduli_.size(); }
  const std::vector<Int>& moduli() const { return moduli_; }

  std::vector<Int> apply(const std::vector<Int>& cycle) const;
  bool is_cycle(const std::vector<Int>& v) const { return cycle_solver_.contains(v); }

  /// Whether the map is the restriction of an integer matrix on all of Z^m
  /// (true whenever the cycle lattice is pure, in particular whenever the
  /// outgoing map lands in a free group).
  bool has_matrix() const { return cycle_solver_.spans_pure_sublattice(); }
  /// That matrix; class row i of the product still wants reduction mod
  /// moduli()[i] for torsion classes.
  IntMatrix matrix() const;

  void negate_class(std::size_t i);

 private:
  LatticeSolver cycle_solver_;  // columns = basis of the cycle lattice
  IntMatrix class_rows_;        // class coords of the cycle-basis coords
  std::vector<Int> moduli_;
};

/// ker/im at one spot of a chain of presented groups, with representatives
/// and the map that pushes cycles to quotient coordinates.
struct Subquotient {
  FGAbelianGroup group;
  /// One middle-coordinate representative per class (free classes first,
  /// then torsion classes in divisibility order), as matrix columns.
  IntMatrix representatives;
  ClassMap class_map;
};

/// Homology of   Z^b --d_in--> M --d_out--> A   where M is presented as
/// Z^m modulo k_i * e_i for the nonzero middle_moduli and A likewise by
/// target_moduli. d_in is m x b, d_out is a x m; b = 0 or a = 0 encode
/// missing maps. Checks that d_out vanishes on the middle torsion and that
/// im(d_in) consists of cycles; violations raise ConsistencyError.
Subquotient subquotient(const IntMatrix& d_in, const std::vector<Int>& middle_moduli,
                        const IntMatrix& d_out, const std::vector<Int>& target_moduli);

/// Free-complex homology: ker(d_out)/im(d_in) for Z^b -> Z^m -> Z^a.
/// Rejects d_out * d_in != 0 (inconsistent differential specification).
Subquotient homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace loopss
