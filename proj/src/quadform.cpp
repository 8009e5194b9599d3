#include "pitlab/quadform.hpp"

#include <stdexcept>

namespace pitlab {

Matrix gram(const Poly& q) {
  if (q.is_zero()) return Matrix(q.vars(), q.vars());
  if (!q.is_homogeneous() || q.total_degree() != 2)
    throw std::invalid_argument("gram requires a homogeneous quadratic");
  const int n = q.vars();
  const FieldElem half = FieldElem::rational(1, 2);
  Matrix m(n, n);
  for (const auto& [mono, c] : q.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (mono.e[v] == 2) { i = j = v; break; }
      if (mono.e[v] == 1) { (i < 0 ? i : j) = v; }
    }
    if (i == j) {
      m.at(i, i) = c;
    } else {
      m.at(i, j) = c * half;
      m.at(j, i) = c * half;
    }
  }
  return m;
}

int quad_rank(const Poly& q) { return gram(q).rank(); }

bool is_irreducible_quadratic(const Poly& q) { return quad_rank(q) >= 3; }

Poly restrict_to_hyperplane(const Poly& q, const Poly& l) {
  if (l.is_zero()) throw std::invalid_argument("restriction to zero form");
  if (l.total_degree() != 1 || !l.is_homogeneous())
    throw std::invalid_argument("restriction needs a linear form");
  if (q.vars() != l.vars()) throw std::invalid_argument("variable count mismatch");

  const int n = q.vars();
  const std::vector<FieldElem> c = l.linear_coeffs();
  int pivot = -1;
  for (int i = 0; i < n; ++i) {
    if (!c[i].is_zero()) { pivot = i; break; }
  }

  // x_pivot := -(1/c_pivot) * sum_{j != pivot} c_j x_j; all other variables fixed.
  Matrix a = Matrix::identity(n);
  const FieldElem inv = c[pivot].inverse();
  for (int j = 0; j < n; ++j) a.at(pivot, j) = (j == pivot) ? FieldElem() : -(inv * c[j]);
  return q.substitute_linear(a);
}

}  // namespace pitlab
