#ifndef POLYHARM_LINALG_HPP
#define POLYHARM_LINALG_HPP

#include <stdexcept>
#include <vector>

#include "polyharm/scalar.hpp"

namespace polyharm {

// Dense row-major matrix over Rational or BigFloat. The systems in this
// library are tiny (at most a few hundred rows), so pivoted Gauss-Jordan
// elimination is all that is ever needed.
template <class S>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<S> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, ScalarTraits<S>::from_long(0)) {}

  S& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const S& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  S max_abs() const {
    S best = ScalarTraits<S>::from_long(0);
    for (const auto& v : a) {
      S x = v.abs();
      if (best < x) best = x;
    }
    return best;
  }
};

// Reduced row echelon form in place. Entries with absolute value <= pivot_tol
// are treated as zero when selecting pivots; pass 0 for exact scalars.
// Returns the pivot columns in ascending order. RREF is unique, so any two
// bases of the same row space reduce to identical matrices.
template <class S>
std::vector<int> rref(DenseMatrix<S>& m, const S& pivot_tol) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    // Largest entry in/below `row` (for exact scalars any nonzero would do;
    // the choice does not change the resulting RREF).
    int best = -1;
    S best_abs = pivot_tol;
    for (int i = row; i < m.rows; ++i) {
      S x = m.at(i, col).abs();
      if (best_abs < x) {
        best_abs = x;
        best = i;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(best, j));
    const S inv_piv = ScalarTraits<S>::from_long(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv_piv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || ScalarTraits<S>::is_zero(m.at(i, col))) continue;
      const S f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
      m.at(i, col) = ScalarTraits<S>::from_long(0);  // clear float residue exactly
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of the null space {x : M x = 0}, one vector per free column, in the
// standard RREF parametrization (deterministic given the column order).
template <class S>
std::vector<std::vector<S>> kernel_basis(DenseMatrix<S> m, const S& pivot_tol) {
  const std::vector<int> pivots = rref(m, pivot_tol);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<S>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<S> v(static_cast<std::size_t>(m.cols), ScalarTraits<S>::from_long(0));
    v[static_cast<std::size_t>(f)] = ScalarTraits<S>::from_long(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Canonical representative of a row space: assemble the vectors as rows,
// reduce, return the nonzero rows. Equal spans give byte-identical output.
template <class S>
std::vector<std::vector<S>> canonical_row_space(const std::vector<std::vector<S>>& rows,
                                                int cols, const S& pivot_tol) {
  DenseMatrix<S> m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  const std::vector<int> pivots = rref(m, pivot_tol);
  std::vector<std::vector<S>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<S> v(static_cast<std::size_t>(cols), ScalarTraits<S>::from_long(0));
    for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(j)] = m.at(static_cast<int>(r), j);
    out.push_back(std::move(v));
  }
  return out;
}

// True iff v lies in the span of the RREF rows `space` (exact scalars).
template <class S>
bool in_row_space(std::vector<S> v, const std::vector<std::vector<S>>& space) {
  for (const auto& row : space) {
    std::size_t piv = 0;
    while (piv < row.size() && ScalarTraits<S>::is_zero(row[piv])) ++piv;
    if (piv == row.size()) continue;
    const S c = v[piv];
    if (ScalarTraits<S>::is_zero(c)) continue;
    for (std::size_t j = piv; j < v.size(); ++j) v[j] -= c * row[j];
  }
  for (const auto& x : v)
    if (!ScalarTraits<S>::is_zero(x)) return false;
  return true;
}

}  // namespace polyharm

#endif
