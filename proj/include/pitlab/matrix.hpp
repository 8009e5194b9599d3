#ifndef PITLAB_MATRIX_HPP
#define PITLAB_MATRIX_HPP

#include <optional>
#include <vector>

#include "pitlab/field.hpp"

namespace pitlab {

// Dense matrix over Q(sqrt(d)). Rank/solve use fraction-free (Bareiss)
// elimination: when the inputs are integral the intermediate entries are
// minors, so they stay integral instead of filling up with fractions.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<FieldElem>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FieldElem& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const FieldElem& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<FieldElem> row(int i) const;
  Matrix transpose() const;
  Matrix mul(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  int rank() const;

  // One exact solution of M x = rhs, or nullopt when inconsistent
  // (free variables are set to zero).
  std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& rhs) const;

  // A nonzero kernel vector, or nullopt when the kernel is trivial.
  std::optional<std::vector<FieldElem>> kernel_vector() const;

  // Basis of the kernel as columns of an n x (n - rank) matrix.
  Matrix kernel_basis() const;

  // Lexicographically least maximal independent subset of the rows.
  std::vector<int> independent_rows() const;

  // Rows of this matrix that form a basis of its row space (original entries,
  // selected by independent_rows).
  Matrix row_space_basis() const;

  // For a full-row-rank t x n matrix B, an n x t matrix R with B R = I.
  Matrix right_inverse() const;

 private:
  int rows_, cols_;
  std::vector<FieldElem> a_;
};

}  // namespace pitlab

#endif  // PITLAB_MATRIX_HPP
