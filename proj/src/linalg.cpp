#include "pitlab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pitlab {

int symbolic_rank(const std::vector<std::vector<Poly>>& input) {
  if (input.empty()) return 0;
  const int rows = int(input.size());
  const int cols = int(input[0].size());
  int nvars = -1;
  for (const auto& r : input) {
    if (int(r.size()) != cols) throw std::invalid_argument("ragged polynomial matrix");
    for (const auto& p : r) {
      if (nvars < 0) nvars = p.vars();
      if (p.vars() != nvars) throw std::invalid_argument("mixed variable counts in polynomial matrix");
    }
  }

  std::vector<std::vector<Poly>> m = input;
  Poly prev = Poly::constant(nvars, FieldElem(1));
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    size_t best = 0;
    for (int i = rank; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (piv < 0 || m[i][c].term_count() < best) {
        piv = i;
        best = m[i][c].term_count();
      }
    }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const Poly p = m[rank][c];
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Poly num = p * m[i][j] - m[i][c] * m[rank][j];
        auto q = Poly::exact_divide(num, prev);
        if (!q) throw std::logic_error("fraction-free update not divisible");
        m[i][j] = std::move(*q);
      }
      m[i][c] = Poly(nvars);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& fs) {
  if (fs.empty()) throw std::invalid_argument("jacobian of empty list");
  const int n = fs[0].vars();
  std::vector<std::vector<Poly>> j;
  j.reserve(fs.size());
  for (const auto& f : fs) {
    if (f.vars() != n) throw std::invalid_argument("mixed variable counts in jacobian");
    std::vector<Poly> row;
    row.reserve(n);
    for (int v = 0; v < n; ++v) row.push_back(f.derivative(v));
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace pitlab
