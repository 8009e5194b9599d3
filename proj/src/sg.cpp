#include "pitlab/sg.hpp"

#include <stdexcept>

#include "pitlab/errors.hpp"
#include "pitlab/linalg.hpp"

namespace pitlab {

SgReport sg_check(const Circuit& c, MemberMode mode, int f_max) {
  const int k = c.k();
  if (k < 1) throw std::invalid_argument("sg_check: empty circuit");
  for (const auto& t : c.terms)
    if (t.factors.empty()) throw std::invalid_argument("sg_check: term without factors");

  SgReport rep;
  for (int i = 0; i < k; ++i) {
    std::vector<int> others;
    for (int t = 0; t < k; ++t)
      if (t != i) others.push_back(t);

    // Mixed-radix enumeration of one factor index per other term,
    // lexicographic with the first other term most significant.
    std::vector<int> choice(others.size(), 0);
    while (true) {
      std::vector<Poly> gens;
      gens.reserve(others.size());
      for (size_t o = 0; o < others.size(); ++o) gens.push_back(c.terms[others[o]].factors[choice[o]]);

      ProductMembership pm = product_member(c.terms[i].factors, gens, mode, f_max);
      if (!pm.member) {
        rep.is_sg = false;
        rep.witness = SgWitness{i, choice};
        return rep;
      }

      int pos = int(choice.size()) - 1;
      while (pos >= 0 && choice[pos] + 1 >= int(c.terms[others[pos]].factors.size())) --pos;
      if (pos < 0) break;
      ++choice[pos];
      for (size_t p = pos + 1; p < choice.size(); ++p) choice[p] = 0;
    }
  }
  rep.is_sg = true;
  return rep;
}

TrdegReport trdeg(const std::vector<Poly>& polys) {
  if (polys.empty()) throw std::invalid_argument("trdeg of empty list");
  TrdegReport rep;
  rep.jacobian_rank = symbolic_rank(jacobian(polys));
  rep.value = rep.jacobian_rank;

  // Greedy independent subset: keep a row iff it grows the Jacobian rank.
  std::vector<Poly> kept;
  int rank = 0;
  for (size_t i = 0; i < polys.size() && rank < rep.value; ++i) {
    kept.push_back(polys[i]);
    const int r = symbolic_rank(jacobian(kept));
    if (r > rank) {
      rank = r;
      rep.basis.push_back(int(i));
    } else {
      kept.pop_back();
    }
  }
  return rep;
}

std::optional<Poly> dependence_oracle(const std::vector<Poly>& polys, int max_degree) {
  if (polys.empty()) throw std::invalid_argument("dependence_oracle of empty list");
  const int m = int(polys.size());
  const int n = polys[0].vars();
  for (const auto& p : polys)
    if (p.vars() != n) throw std::invalid_argument("mixed variable counts");

  // Candidate monomials u^e, degree 0..max_degree, and their expansions.
  std::vector<Monomial> cand;
  std::vector<Poly> expansion;
  std::vector<std::vector<Poly>> pow(m, {Poly::constant(n, FieldElem(1))});
  for (int d = 0; d <= max_degree; ++d) {
    for (const Monomial& mu : monomials_of_degree(m, d)) {
      Poly e = Poly::constant(n, FieldElem(1));
      for (int i = 0; i < m; ++i) {
        while (int(pow[i].size()) <= mu.e[i]) pow[i].push_back(pow[i].back() * polys[i]);
        if (mu.e[i] > 0) e = e * pow[i][mu.e[i]];
      }
      cand.push_back(mu);
      expansion.push_back(std::move(e));
    }
  }

  std::map<Monomial, int, GradedLexLess> row_of;
  for (const auto& e : expansion)
    for (const auto& [mono, c] : e.terms()) row_of.emplace(mono, int(row_of.size()));

  Matrix M(int(row_of.size()), int(cand.size()));
  for (size_t j = 0; j < expansion.size(); ++j)
    for (const auto& [mono, c] : expansion[j].terms()) M.at(row_of.at(mono), int(j)) = c;

  auto v = M.kernel_vector();
  if (!v) return std::nullopt;

  Poly f(m);
  for (size_t j = 0; j < cand.size(); ++j) f.add_term(cand[j], (*v)[j]);
  if (f.is_zero()) throw std::logic_error("kernel vector produced the zero annihilator");
  return f;
}

namespace {

bool preserves_rank(const std::vector<Poly>& polys, const Matrix& a, int tau) {
  if (a.rank() < tau) return false;
  std::vector<Poly> sub;
  sub.reserve(polys.size());
  for (const auto& p : polys) sub.push_back(p.substitute_linear(a));
  return symbolic_rank(jacobian(sub)) == tau;
}

}  // namespace

FaithfulMap faithful_reduce(const std::vector<Poly>& polys, int tau, long candidate_budget) {
  if (polys.empty()) throw std::invalid_argument("faithful_reduce of empty list");
  const int n = polys[0].vars();
  const TrdegReport td = trdeg(polys);
  if (td.value != tau) throw std::invalid_argument("faithful_reduce: tau does not match trdeg");
  if (tau == n) return FaithfulMap{Matrix::identity(n), 1};
  if (tau < 1 || tau > n) throw std::invalid_argument("faithful_reduce: tau out of range");

  long tried = 0;
  auto spend = [&]() {
    if (++tried > candidate_budget) throw ResourceExceeded("faithful_reduce candidate budget exceeded");
  };

  // Coordinate projections: columns are tau distinct basis vectors.
  {
    std::vector<int> idx(tau);
    for (int i = 0; i < tau; ++i) idx[i] = i;
    while (true) {
      spend();
      Matrix a(n, tau);
      for (int j = 0; j < tau; ++j) a.at(idx[j], j) = FieldElem(1);
      if (preserves_rank(polys, a, tau)) return FaithfulMap{a, 1};
      int pos = tau - 1;
      while (pos >= 0 && idx[pos] == n - tau + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < tau; ++i) idx[i] = idx[i - 1] + 1;
    }
  }

  for (int grid = 1;; grid *= 2) {
    // Vandermonde candidates: row i = (1, beta_i, beta_i^2, ...), beta from
    // {0..grid}^n in lexicographic order.
    std::vector<long> beta(n, 0);
    while (true) {
      spend();
      Matrix a(n, tau);
      for (int i = 0; i < n; ++i) {
        long p = 1;
        for (int j = 0; j < tau; ++j) {
          a.at(i, j) = FieldElem(p);
          p *= beta[i];
        }
      }
      if (preserves_rank(polys, a, tau)) return FaithfulMap{a, grid};
      int pos = n - 1;
      while (pos >= 0 && beta[pos] == grid) --pos;
      if (pos < 0) break;
      ++beta[pos];
      for (int i = pos + 1; i < n; ++i) beta[i] = 0;
    }

    // General integer matrices over the same grid, capped per level so the
    // next (larger) grid is still reached within budget.
    const long level_cap = 20000;
    std::vector<long> cell(size_t(n) * tau, 0);
    for (long count = 0; count < level_cap; ++count) {
      spend();
      Matrix a(n, tau);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < tau; ++j) a.at(i, j) = FieldElem(cell[size_t(i) * tau + j]);
      if (preserves_rank(polys, a, tau)) return FaithfulMap{a, grid};
      int pos = int(cell.size()) - 1;
      while (pos >= 0 && cell[pos] == grid) --pos;
      if (pos < 0) break;
      ++cell[pos];
      for (size_t i = pos + 1; i < cell.size(); ++i) cell[i] = 0;
    }
  }
}

}  // namespace pitlab
