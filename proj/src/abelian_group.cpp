#include "loopss/abelian_group.hpp"

#include <algorithm>
#include <sstream>

namespace loopss {

std::vector<Int> FGAbelianGroup::moduli() const {
  std::vector<Int> out(rank, Int(0));
  out.insert(out.end(), torsion.begin(), torsion.end());
  return out;
}

std::string FGAbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank == 1) {
    os << "Z";
    first = false;
  } else if (rank > 1) {
    os << "Z^" << rank;
    first = false;
  }
  for (const Int& t : torsion) {
    os << (first ? "" : " + ") << "Z_" << t;
    first = false;
  }
  return os.str();
}

FGAbelianGroup canonical_group(const std::vector<Int>& cyclic_orders) {
  FGAbelianGroup g;
  std::vector<Int> torsion;
  for (const Int& k : cyclic_orders) {
    if (k == 0)
      ++g.rank;
    else if (k > 1)
      torsion.push_back(k);
    else if (k < 0)
      throw ValidationError("canonical_group: negative cyclic order");
  }
  if (!torsion.empty()) {
    // Invariant factors of the diagonal presentation.
    SnfDecomposition snf = smith_decompose(IntMatrix::diagonal(torsion));
    g.torsion.clear();
    for (const Int& d : snf.invariant_factors())
      if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Int> orders(a.rank + b.rank, Int(0));
  orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return canonical_group(orders);
}

ClassMap::ClassMap(LatticeSolver cycle_solver, IntMatrix class_rows, std::vector<Int> moduli)
    : cycle_solver_(std::move(cycle_solver)),
      class_rows_(std::move(class_rows)),
      moduli_(std::move(moduli)) {
  if (class_rows_.rows() != moduli_.size())
    throw ValidationError("ClassMap: row/modulus count mismatch");
}

std::vector<Int> ClassMap::apply(const std::vector<Int>& cycle) const {
  std::vector<Int> x = cycle_solver_.solve(cycle);
  std::vector<Int> y = class_rows_.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (moduli_[i] != 0) y[i] = mod_floor(y[i], moduli_[i]);
  return y;
}

IntMatrix ClassMap::matrix() const { return class_rows_ * cycle_solver_.solve_matrix(); }

void ClassMap::negate_class(std::size_t i) { class_rows_.negate_row(i); }

namespace {

// Columns k_i * e_i for the nonzero moduli.
IntMatrix torsion_columns(const std::vector<Int>& moduli) {
  std::size_t m = moduli.size();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m; ++i)
    if (moduli[i] != 0) idx.push_back(i);
  IntMatrix rho(m, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) rho.at(idx[j], j) = moduli[idx[j]];
  return rho;
}

bool reduces_to_zero(const Int& value, const Int& modulus) {
  if (modulus == 0) return value == 0;
  return value % modulus == 0;
}

// Basis of the lattice spanned by the columns of s inside Z^m.
IntMatrix span_basis(const IntMatrix& s) {
  SnfDecomposition snf = smith_decompose(s);
  IntMatrix basis(s.rows(), snf.rank);
  for (std::size_t i = 0; i < snf.rank; ++i) {
    std::vector<Int> col = snf.U_inv.column(i);
    for (auto& v : col) v *= snf.D.at(i, i);
    basis.set_column(i, col);
  }
  return basis;
}

}  // namespace

Subquotient subquotient(const IntMatrix& d_in, const std::vector<Int>& middle_moduli,
                        const IntMatrix& d_out, const std::vector<Int>& target_moduli) {
  const std::size_t m = middle_moduli.size();
  const std::size_t a = d_out.rows();
  const std::size_t b = d_in.cols();
  if (a > 0 && d_out.cols() != m)
    throw ValidationError("subquotient: d_out column count must equal middle rank");
  if (b > 0 && d_in.rows() != m)
    throw ValidationError("subquotient: d_in row count must equal middle rank");
  if (target_moduli.size() != a)
    throw ValidationError("subquotient: target moduli length mismatch");

  // d_out must kill the middle torsion (well-definedness on the presented
  // group) and the chain condition must hold modulo the target torsion.
  if (a > 0) {
    for (std::size_t i = 0; i < m; ++i) {
      if (middle_moduli[i] == 0) continue;
      for (std::size_t j = 0; j < a; ++j)
        if (!reduces_to_zero(middle_moduli[i] * d_out.at(j, i), target_moduli[j]))
          throw ConsistencyError("subquotient: differential not defined on middle torsion");
    }
    if (b > 0) {
      IntMatrix comp = d_out * d_in;
      for (std::size_t j = 0; j < a; ++j)
        for (std::size_t c = 0; c < b; ++c)
          if (!reduces_to_zero(comp.at(j, c), target_moduli[j]))
            throw ConsistencyError("subquotient: d∘d != 0, inconsistent differential");
    }
  }

  // Cycle lattice K = { c : d_out c = 0 in the presented target }.
  IntMatrix k_basis;
  if (a == 0) {
    k_basis = IntMatrix::identity(m);
  } else {
    IntMatrix aug = d_out.concat_cols(torsion_columns(target_moduli));
    std::vector<std::vector<Int>> null = kernel_basis(aug);
    IntMatrix proj(m, null.size());
    for (std::size_t j = 0; j < null.size(); ++j)
      for (std::size_t i = 0; i < m; ++i) proj.at(i, j) = null[j][i];
    k_basis = span_basis(proj);
  }
  const std::size_t k = k_basis.cols();
  LatticeSolver cycle_solver(k_basis);

  // Boundaries plus middle torsion, in cycle coordinates.
  IntMatrix j_gens = d_in.concat_cols(torsion_columns(middle_moduli));
  IntMatrix x(k, j_gens.cols());
  for (std::size_t c = 0; c < j_gens.cols(); ++c)
    x.set_column(c, cycle_solver.solve(j_gens.column(c)));

  SnfDecomposition xs = smith_decompose(x);
  auto diag = [&](std::size_t i) -> Int {
    return i < std::min(xs.D.rows(), xs.D.cols()) ? xs.D.at(i, i) : Int(0);
  };

  std::vector<std::size_t> order;  // class order: free first, then torsion
  FGAbelianGroup group;
  for (std::size_t i = 0; i < k; ++i)
    if (diag(i) == 0) {
      order.push_back(i);
      ++group.rank;
    }
  for (std::size_t i = 0; i < k; ++i)
    if (diag(i) >= 2) {
      order.push_back(i);
      group.torsion.push_back(diag(i));
    }

  IntMatrix all_reps = k_basis * xs.U_inv;  // middle coords of SNF basis
  IntMatrix reps(m, order.size());
  IntMatrix class_rows(order.size(), k);
  for (std::size_t c = 0; c < order.size(); ++c) {
    reps.set_column(c, all_reps.column(order[c]));
    for (std::size_t j = 0; j < k; ++j) class_rows.at(c, j) = xs.U.at(order[c], j);
  }

  ClassMap map(std::move(cycle_solver), std::move(class_rows), group.moduli());
  // Deterministic representative signs: first nonzero middle coordinate > 0.
  for (std::size_t c = 0; c < order.size(); ++c) {
    for (std::size_t i = 0; i < m; ++i) {
      if (reps.at(i, c) == 0) continue;
      if (reps.at(i, c) < 0) {
        reps.negate_col(c);
        map.negate_class(c);
      }
      break;
    }
  }

  return Subquotient{std::move(group), std::move(reps), std::move(map)};
}

Subquotient homology_of_pair(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_out.cols() != d_in.rows() && d_out.rows() > 0 && d_in.cols() > 0)
    throw ValidationError("homology_of_pair: middle rank mismatch");
  const std::size_t m = d_out.rows() > 0 ? d_out.cols() : d_in.rows();
  if (d_out.rows() > 0 && d_in.cols() > 0) {
    if (!(d_out * d_in).is_zero())
      throw ConsistencyError("homology_of_pair: d_out * d_in != 0");
  }
  return subquotient(d_in, std::vector<Int>(m, Int(0)), d_out, std::vector<Int>(d_out.rows(), Int(0)));
}

}  // namespace loopss
