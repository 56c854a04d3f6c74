#include "loopss/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace loopss {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw ValidationError("IntMatrix: entries length must equal rows*cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("IntMatrix: ragged initializer");
    for (const auto& v : row) entries_.push_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ValidationError("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_) throw ValidationError("IntMatrix: dimension mismatch in apply");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::concat_cols(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ && cols_ != 0 && rhs.cols_ != 0)
    throw ValidationError("IntMatrix: row mismatch in concat");
  std::size_t rows = std::max(rows_, rhs.rows_);
  IntMatrix out(rows, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < rhs.rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) += q * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw ValidationError("determinant: matrix not square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination with row pivoting.
  IntMatrix w = *this;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num / prev;  // exact by Sylvester's identity
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

std::vector<Int> SnfDecomposition::invariant_factors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D.at(i, i));
  return out;
}

namespace {

// The five elementary operations, mirrored onto the transforms and their
// tracked inverses so that U*A*V = D and U*U_inv = V*V_inv = I at all times.
struct SnfWorker {
  IntMatrix D, U, V, U_inv, V_inv;

  explicit SnfWorker(const IntMatrix& a)
      : D(a),
        U(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        U_inv(IntMatrix::identity(a.rows())),
        V_inv(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
    U_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
    V_inv.swap_rows(i, j);
  }
  void row_op(std::size_t i, std::size_t j, const Int& q) {  // row i += q row j
    D.add_row(i, j, q);
    U.add_row(i, j, q);
    U_inv.add_col(j, i, -q);
  }
  void col_op(std::size_t i, std::size_t j, const Int& q) {  // col i += q col j
    D.add_col(i, j, q);
    V.add_col(i, j, q);
    V_inv.add_row(j, i, -q);
  }
  void negate_row(std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
    U_inv.negate_col(i);
  }

  // Smallest nonzero |entry| in the trailing submatrix, ties by (row, col).
  bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best = 0;
    for (std::size_t i = k; i < D.rows(); ++i)
      for (std::size_t j = k; j < D.cols(); ++j) {
        const Int& v = D.at(i, j);
        if (v == 0) continue;
        Int a = abs_int(v);
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void reduce() {
    std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(k, pi, pj)) break;
      swap_rows(k, pi);
      swap_cols(k, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = k + 1; i < D.rows(); ++i)
          if (D.at(i, k) != 0) {
            Int q = D.at(i, k) / D.at(k, k);
            row_op(i, k, -q);
            if (D.at(i, k) != 0) clean = false;
          }
        for (std::size_t j = k + 1; j < D.cols(); ++j)
          if (D.at(k, j) != 0) {
            Int q = D.at(k, j) / D.at(k, k);
            col_op(j, k, -q);
            if (D.at(k, j) != 0) clean = false;
          }
        if (!clean) {
          std::size_t qi = 0, qj = 0;
          find_pivot(k, qi, qj);
          swap_rows(k, qi);
          swap_cols(k, qj);
          continue;
        }
        // Row and column k are clear; enforce divisibility of the rest.
        bool divides = true;
        for (std::size_t i = k + 1; i < D.rows() && divides; ++i)
          for (std::size_t j = k + 1; j < D.cols() && divides; ++j)
            if (D.at(i, j) % D.at(k, k) != 0) {
              row_op(k, i, 1);
              divides = false;
            }
        if (divides) break;
      }
      if (D.at(k, k) < 0) negate_row(k);
    }
  }
};

}  // namespace

SnfDecomposition smith_decompose(const IntMatrix& a) {
  SnfWorker w(a);
  w.reduce();
  SnfDecomposition out;
  out.U = std::move(w.U);
  out.D = std::move(w.D);
  out.V = std::move(w.V);
  out.U_inv = std::move(w.U_inv);
  out.V_inv = std::move(w.V_inv);
  std::size_t n = std::min(out.D.rows(), out.D.cols());
  out.rank = 0;
  while (out.rank < n && out.D.at(out.rank, out.rank) != 0) ++out.rank;
  return out;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  SnfDecomposition full = smith_decompose(a);
  return SNFResult{std::move(full.U), std::move(full.D), std::move(full.V)};
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
  SnfDecomposition snf = smith_decompose(a);
  std::vector<std::vector<Int>> out;
  for (std::size_t j = snf.rank; j < a.cols(); ++j) out.push_back(snf.V.column(j));
  return out;
}

LatticeSolver::LatticeSolver(IntMatrix m) : m_(std::move(m)), snf_(smith_decompose(m_)) {}

bool LatticeSolver::spans_pure_sublattice() const {
  for (std::size_t i = 0; i < snf_.rank; ++i)
    if (snf_.D.at(i, i) != 1) return false;
  return true;
}

bool LatticeSolver::contains(const std::vector<Int>& c) const {
  std::vector<Int> w = snf_.U.apply(c);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < snf_.rank) {
      if (w[i] % snf_.D.at(i, i) != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Int> LatticeSolver::solve(const std::vector<Int>& c) const {
  std::vector<Int> w = snf_.U.apply(c);
  std::vector<Int> y(m_.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < snf_.rank) {
      if (w[i] % snf_.D.at(i, i) != 0)
        throw ConsistencyError("LatticeSolver: vector outside the column lattice");
      y[i] = w[i] / snf_.D.at(i, i);
    } else if (w[i] != 0) {
      throw ConsistencyError("LatticeSolver: vector outside the column lattice");
    }
  }
  return snf_.V.apply(y);
}

IntMatrix LatticeSolver::solve_matrix() const {
  if (!spans_pure_sublattice())
    throw ConsistencyError("LatticeSolver: no integral solve matrix, lattice is not pure");
  // x = V * [I_r 0] * U c  (all invariant factors are 1).
  IntMatrix sel(m_.cols(), m_.rows());
  for (std::size_t i = 0; i < snf_.rank; ++i) sel.at(i, i) = 1;
  return snf_.V * (sel * snf_.U);
}

Int mod_floor(const Int& value, const Int& modulus) {
  Int r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

}  // namespace loopss
