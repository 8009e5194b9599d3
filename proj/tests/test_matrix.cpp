#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pitlab/linalg.hpp"
#include "pitlab/matrix.hpp"
#include "support.hpp"

using namespace pitlab;

namespace {

Matrix rand_matrix(std::mt19937_64& rng, int r, int c, long lo = -4, long hi = 4) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = FieldElem(lo + long(rng() % uint64_t(hi - lo + 1)));
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(Matrix::identity(3).rank() == 3);
  CHECK(Matrix(4, 5).rank() == 0);
  const Matrix m = Matrix::from_rows({{FieldElem(1), FieldElem(2)}, {FieldElem(2), FieldElem(4)}});
  CHECK(m.rank() == 1);
}

TEST_CASE("rank equals transpose rank and survives row shuffles") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
    const Matrix m = rand_matrix(rng, r, c);
    CHECK(m.rank() == m.transpose().rank());

    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<FieldElem>> rows;
    for (int i : perm) rows.push_back(m.row(i));
    CHECK(Matrix::from_rows(rows).rank() == m.rank());
  }
}

TEST_CASE("rank invariant under invertible row operations") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + int(rng() % 3);
    const Matrix m = rand_matrix(rng, n, n + 1);
    const Matrix t = tsup::rand_invertible(rng, n);
    CHECK(t.mul(m).rank() == m.rank());
  }
}

TEST_CASE("solve basics") {
  const Matrix id = Matrix::identity(3);
  auto x = id.solve({FieldElem(1), FieldElem(0), FieldElem(0)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == FieldElem(1));
  CHECK((*x)[1] == FieldElem(0));

  const Matrix row = Matrix::from_rows({{FieldElem(1), FieldElem(1)}});
  auto y = row.solve({FieldElem(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == FieldElem(2));

  const Matrix bad = Matrix::from_rows({{FieldElem(1), FieldElem(1)}, {FieldElem(1), FieldElem(1)}});
  CHECK_FALSE(bad.solve({FieldElem(1), FieldElem(2)}).has_value());
}

TEST_CASE("solve re-multiplies exactly") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
    const Matrix m = rand_matrix(rng, r, c);
    std::vector<FieldElem> x0(c);
    for (int j = 0; j < c; ++j) x0[j] = tsup::rand_elem(rng);
    std::vector<FieldElem> rhs(r);
    for (int i = 0; i < r; ++i) {
      FieldElem acc;
      for (int j = 0; j < c; ++j) acc += m.at(i, j) * x0[j];
      rhs[i] = acc;
    }
    auto x = m.solve(rhs);
    REQUIRE(x.has_value());
    for (int i = 0; i < r; ++i) {
      FieldElem acc;
      for (int j = 0; j < c; ++j) acc += m.at(i, j) * (*x)[j];
      CHECK(acc == rhs[i]);
    }
  }
}

TEST_CASE("kernel basis") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + int(rng() % 4), c = 1 + int(rng() % 5);
    const Matrix m = rand_matrix(rng, r, c);
    const Matrix kb = m.kernel_basis();
    CHECK(kb.cols() == c - m.rank());
    for (int col = 0; col < kb.cols(); ++col) {
      for (int i = 0; i < r; ++i) {
        FieldElem acc;
        for (int j = 0; j < c; ++j) acc += m.at(i, j) * kb.at(j, col);
        CHECK(acc.is_zero());
      }
    }
    if (kb.cols() > 0) CHECK(kb.rank() == kb.cols());
  }
}

TEST_CASE("independent rows are lexicographically least") {
  const Matrix m = Matrix::from_rows({{FieldElem(1), FieldElem(0)},
                                      {FieldElem(2), FieldElem(0)},
                                      {FieldElem(0), FieldElem(1)}});
  CHECK(m.independent_rows() == std::vector<int>{0, 2});
  CHECK(m.row_space_basis().rows() == 2);
}

TEST_CASE("right inverse") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const int t = 1 + int(rng() % 3);
    const int n = t + int(rng() % 3);
    Matrix b = rand_matrix(rng, t, n);
    if (b.rank() != t) continue;
    const Matrix r = b.right_inverse();
    CHECK(b.mul(r) == Matrix::identity(t));
  }
  const Matrix sing = Matrix::from_rows({{FieldElem(0), FieldElem(0)}});
  CHECK_THROWS_AS(sing.right_inverse(), std::invalid_argument);
}

TEST_CASE("symbolic rank examples") {
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  CHECK(symbolic_rank({{x}}) == 1);
  CHECK(symbolic_rank({{x}, {x + x}}) == 1);

  // Jacobian of {xy, x^2, y^2}: rank 2.
  const auto j = jacobian({x * y, x * x, y * y});
  CHECK(j.size() == 3);
  CHECK(symbolic_rank(j) == 2);
}

TEST_CASE("symbolic rank dominates rank at any point and meets it on a grid") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = 1 + int(rng() % 3), c = 1 + int(rng() % 3), n = 2;
    std::vector<std::vector<Poly>> m(r, std::vector<Poly>(c, Poly(n)));
    int maxdeg = 0;
    for (auto& row : m)
      for (auto& e : row) {
        e = tsup::rand_poly(rng, n, 1 + int(rng() % 2), 3);
        maxdeg = std::max(maxdeg, std::max(0, e.total_degree()));
      }
    const int sr = symbolic_rank(m);

    int best = 0;
    const int grid = r * c * maxdeg + 2;  // exceeds the total degree of any minor
    for (int gx = 0; gx <= grid && best < sr; ++gx) {
      for (int gy = 0; gy <= grid && best < sr; ++gy) {
        Matrix eval(r, c);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < c; ++j) eval.at(i, j) = m[i][j].eval({FieldElem(gx), FieldElem(gy)});
        const int er = eval.rank();
        CHECK(er <= sr);
        best = std::max(best, er);
      }
    }
    CHECK(best == sr);
  }
}
