#include "pitlab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace pitlab {

namespace {

// Fraction-free forward elimination on an augmented matrix (aug extra
// columns on the right take part in updates but are never pivots).
// Returns the pivot columns; on exit rows [rank, rows) are zero in the
// non-augmented part.
struct Echelon {
  std::vector<std::vector<FieldElem>> m;
  std::vector<int> pivot_cols;
  std::vector<int> row_origin;  // original index of each row after swaps
};

Echelon eliminate(const Matrix& M, const std::vector<FieldElem>* rhs) {
  const int rows = M.rows(), cols = M.cols();
  const int width = cols + (rhs ? 1 : 0);
  Echelon e;
  e.m.assign(rows, std::vector<FieldElem>(width));
  e.row_origin.resize(rows);
  for (int i = 0; i < rows; ++i) {
    e.row_origin[i] = i;
    for (int j = 0; j < cols; ++j) e.m[i][j] = M.at(i, j);
    if (rhs) e.m[i][cols] = (*rhs)[i];
  }

  FieldElem prev(1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int i = rank; i < rows; ++i) {
      if (!e.m[i][c].is_zero()) { piv = i; break; }
    }
    if (piv < 0) continue;
    std::swap(e.m[rank], e.m[piv]);
    std::swap(e.row_origin[rank], e.row_origin[piv]);
    const FieldElem p = e.m[rank][c];
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < width; ++j) {
        e.m[i][j] = (p * e.m[i][j] - e.m[i][c] * e.m[rank][j]) / prev;
      }
      e.m[i][c] = FieldElem();
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++rank;
  }
  return e;
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElem>>& rows) {
  const int r = int(rows.size());
  const int c = r ? int(rows[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<FieldElem> Matrix::row(int i) const {
  std::vector<FieldElem> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in mul");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

int Matrix::rank() const { return int(eliminate(*this, nullptr).pivot_cols.size()); }

std::optional<std::vector<FieldElem>> Matrix::solve(const std::vector<FieldElem>& rhs) const {
  if (int(rhs.size()) != rows_) throw std::invalid_argument("rhs length mismatch");
  Echelon e = eliminate(*this, &rhs);
  const int rank = int(e.pivot_cols.size());
  for (int i = rank; i < rows_; ++i) {
    if (!e.m[i][cols_].is_zero()) return std::nullopt;
  }
  std::vector<FieldElem> x(cols_);
  for (int i = rank - 1; i >= 0; --i) {
    const int pc = e.pivot_cols[i];
    FieldElem acc = e.m[i][cols_];
    for (int j = pc + 1; j < cols_; ++j) {
      if (!e.m[i][j].is_zero()) acc -= e.m[i][j] * x[j];
    }
    x[pc] = acc / e.m[i][pc];
  }
  return x;
}

std::optional<std::vector<FieldElem>> Matrix::kernel_vector() const {
  Matrix kb = kernel_basis();
  if (kb.cols() == 0) return std::nullopt;
  std::vector<FieldElem> v(cols_);
  for (int i = 0; i < cols_; ++i) v[i] = kb.at(i, 0);
  return v;
}

Matrix Matrix::kernel_basis() const {
  Echelon e = eliminate(*this, nullptr);
  const int rank = int(e.pivot_cols.size());
  std::vector<bool> is_pivot(cols_, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  Matrix kb(cols_, cols_ - rank);
  int out = 0;
  for (int fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<FieldElem> v(cols_);
    v[fc] = FieldElem(1);
    for (int i = rank - 1; i >= 0; --i) {
      const int pc = e.pivot_cols[i];
      FieldElem acc;
      for (int j = pc + 1; j < cols_; ++j) {
        if (!e.m[i][j].is_zero() && !v[j].is_zero()) acc += e.m[i][j] * v[j];
      }
      v[pc] = -acc / e.m[i][pc];
    }
    for (int i = 0; i < cols_; ++i) kb.at(i, out) = v[i];
    ++out;
  }
  return kb;
}

std::vector<int> Matrix::independent_rows() const {
  std::vector<int> chosen;
  std::vector<std::vector<FieldElem>> sel;
  int rank = 0;
  for (int i = 0; i < rows_; ++i) {
    sel.push_back(row(i));
    Matrix probe = Matrix::from_rows(sel);
    if (probe.rank() > rank) {
      ++rank;
      chosen.push_back(i);
    } else {
      sel.pop_back();
    }
  }
  return chosen;
}

Matrix Matrix::row_space_basis() const {
  std::vector<std::vector<FieldElem>> rows;
  for (int i : independent_rows()) rows.push_back(row(i));
  Matrix b = Matrix::from_rows(rows);
  if (b.cols() == 0 && cols_ > 0) b = Matrix(0, cols_);
  return b;
}

Matrix Matrix::right_inverse() const {
  Matrix r(cols_, rows_);
  for (int j = 0; j < rows_; ++j) {
    std::vector<FieldElem> e(rows_);
    e[j] = FieldElem(1);
    auto x = solve(e);
    if (!x) throw std::invalid_argument("right_inverse requires full row rank");
    for (int i = 0; i < cols_; ++i) r.at(i, j) = (*x)[i];
  }
  return r;
}

}  // namespace pitlab
