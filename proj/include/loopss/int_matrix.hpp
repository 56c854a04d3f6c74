#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopss {

/// Exact arbitrary-precision integer. Entries of reduction intermediates can
/// exceed any fixed width even for small inputs, so no machine-int fallback
/// is offered anywhere in the library.
using Int = boost::multiprecision::cpp_int;

/// Raised when an input violates a documented precondition (bad model file,
/// malformed presentation, out-of-range request). The CLI maps it to exit 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when supplied differential data is internally inconsistent
/// (d∘d != 0, image outside the target span, non-cycle pushforward).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense integer matrix, row-major. Zero-size matrices are legal and show up
/// routinely (empty differentials at the window edges).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  /// Diagonal matrix from the given entries (square).
  static IntMatrix diagonal(const std::vector<Int>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;

  std::vector<Int> column(std::size_t j) const;
  void set_column(std::size_t j, const std::vector<Int>& v);
  /// Horizontal concatenation [*this | rhs]; row counts must agree.
  IntMatrix concat_cols(const IntMatrix& rhs) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q);
  /// col i += q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  /// Determinant by fraction-free elimination; square matrices only.
  Int determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// SNFResult plus the inverses (tracked during reduction, not recomputed)
/// and the rank. Internal consumers need U^-1 columns as lattice bases.
struct SnfDecomposition {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;
  std::vector<Int> invariant_factors() const;
};

/// Deterministic Smith normal form. Pivot = smallest nonzero absolute value,
/// ties broken by lowest (row, col), so outputs are reproducible.
SNFResult smith_normal_form(const IntMatrix& a);
SnfDecomposition smith_decompose(const IntMatrix& a);

/// Basis of { v : A v = 0 } as a subgroup of Z^cols, read off from the
/// V-columns matching zero diagonal entries of the SNF.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

/// Exact solver against the column lattice of a fixed matrix M:
/// answers "is c in span_Z(columns of M)" and produces one preimage.
/// When M has full column rank the preimage is unique.
class LatticeSolver {
 public:
  LatticeSolver() = default;
  explicit LatticeSolver(IntMatrix m);

  const IntMatrix& matrix() const { return m_; }
  std::size_t rank() const { return snf_.rank; }
  /// True iff every invariant factor of M is 1, i.e. the column span is a
  /// direct summand of the ambient Z^rows. Exactly then does solving extend
  /// to an integer matrix on the whole ambient space.
  bool spans_pure_sublattice() const;

  bool contains(const std::vector<Int>& c) const;
  /// Solve M x = c; throws ConsistencyError when c is outside the lattice.
  std::vector<Int> solve(const std::vector<Int>& c) const;

  /// Integer matrix S with S*c = solve(c) for every c in the lattice;
  /// only available when spans_pure_sublattice().
  IntMatrix solve_matrix() const;

 private:
  IntMatrix m_;
  SnfDecomposition snf_;
};

Int mod_floor(const Int& value, const Int& modulus);

}  // namespace loopss
