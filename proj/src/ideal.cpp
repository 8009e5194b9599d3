#include "pitlab/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pitlab/matrix.hpp"

namespace pitlab {

bool MembershipCertificate::verify() const {
  if (generators.size() != multipliers.size()) return false;
  Poly acc(target.vars());
  for (size_t i = 0; i < generators.size(); ++i) {
    const Poly& m = multipliers[i];
    if (!m.is_zero()) {
      if (!m.is_homogeneous()) return false;
      if (m.total_degree() != target.total_degree() - generators[i].total_degree()) return false;
    }
    acc = acc + generators[i] * m;
  }
  return acc == target;
}

namespace {

// Substitution matrix eliminating the pivot variable of the linear form l.
Matrix hyperplane_subst(const Poly& l) {
  const int n = l.vars();
  const std::vector<FieldElem> c = l.linear_coeffs();
  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (!c[i].is_zero()) { pivot = i; break; }
  Matrix a = Matrix::identity(n);
  const FieldElem inv = c[pivot].inverse();
  for (int j = 0; j < n; ++j) a.at(pivot, j) = (j == pivot) ? FieldElem() : -(inv * c[j]);
  return a;
}

// Multipliers for A = sum D_i g_i over the given generators, or nullopt.
std::optional<std::vector<Poly>> member_rec(const Poly& A, const std::vector<Poly>& gens);

// The one-equation-per-monomial linear system; gens nonzero, none linear.
std::optional<std::vector<Poly>> member_system(const Poly& A, const std::vector<Poly>& gens) {
  const int n = A.vars();
  const int a = A.total_degree();

  struct Column {
    size_t gi;
    Monomial mu;
  };
  std::vector<Column> cols;
  std::map<Monomial, int, GradedLexLess> row_of;
  auto row_id = [&](const Monomial& m) {
    auto [it, fresh] = row_of.emplace(m, int(row_of.size()));
    (void)fresh;
    return it->second;
  };

  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const int mudeg = a - gens[gi].total_degree();
    if (mudeg < 0) continue;
    for (const Monomial& mu : monomials_of_degree(n, mudeg)) {
      cols.push_back({gi, mu});
      for (const auto& [mg, c] : gens[gi].terms()) row_id(mg * mu);
    }
  }
  for (const auto& [m, c] : A.terms()) row_id(m);

  Matrix M(int(row_of.size()), int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [mg, c] : gens[cols[j].gi].terms()) {
      M.at(row_id(mg * cols[j].mu), int(j)) += c;
    }
  }
  std::vector<FieldElem> rhs(row_of.size());
  for (const auto& [m, r] : row_of) rhs[r] = A.coeff(m);

  auto x = M.solve(rhs);
  if (!x) return std::nullopt;

  std::vector<Poly> mult(gens.size(), Poly(n));
  for (size_t j = 0; j < cols.size(); ++j) mult[cols[j].gi].add_term(cols[j].mu, (*x)[j]);
  return mult;
}

std::optional<std::vector<Poly>> member_rec(const Poly& A, const std::vector<Poly>& gens) {
  const int n = A.vars();
  if (A.is_zero()) return std::vector<Poly>(gens.size(), Poly(n));

  // Eliminate the first linear generator by restricting to its hyperplane.
  for (size_t li = 0; li < gens.size(); ++li) {
    const Poly& l = gens[li];
    if (l.is_zero() || l.total_degree() != 1) continue;
    const Matrix s = hyperplane_subst(l);
    Poly a_rest = A.substitute_linear(s);
    std::vector<Poly> rest;
    rest.reserve(gens.size() - 1);
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j == li) continue;
      rest.push_back(gens[j].substitute_linear(s));
    }
    auto sub = member_rec(a_rest, rest);
    if (!sub) return std::nullopt;

    std::vector<Poly> mult(gens.size(), Poly(n));
    Poly acc = A;
    size_t out = 0;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j == li) continue;
      mult[j] = (*sub)[out++];
      acc = acc - mult[j] * gens[j];
    }
    auto q = Poly::exact_divide(acc, l);
    if (!q) throw std::logic_error("hyperplane elimination left a non-divisible remainder");
    mult[li] = std::move(*q);
    return mult;
  }

  // No linear generators left: drop zero generators, then either divide by a
  // single generator or solve the full system.
  std::vector<size_t> live;
  for (size_t j = 0; j < gens.size(); ++j)
    if (!gens[j].is_zero()) live.push_back(j);

  std::vector<Poly> mult(gens.size(), Poly(n));
  if (live.empty()) return std::nullopt;  // A != 0 here
  if (live.size() == 1) {
    auto q = Poly::exact_divide(A, gens[live[0]]);
    if (!q) return std::nullopt;
    mult[live[0]] = std::move(*q);
    return mult;
  }

  std::vector<Poly> gs;
  gs.reserve(live.size());
  for (size_t j : live) gs.push_back(gens[j]);
  auto sys = member_system(A, gs);
  if (!sys) return std::nullopt;
  for (size_t i = 0; i < live.size(); ++i) mult[live[i]] = std::move((*sys)[i]);
  return mult;
}

}  // namespace

std::optional<MembershipCertificate> member_homogeneous(const Poly& A,
                                                        const std::vector<Poly>& gens) {
  if (!A.is_homogeneous()) throw std::invalid_argument("member_homogeneous: target not homogeneous");
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw std::invalid_argument("member_homogeneous: generator not homogeneous");
    if (g.vars() != A.vars()) throw std::invalid_argument("member_homogeneous: variable count mismatch");
  }
  auto mult = member_rec(A, gens);
  if (!mult) return std::nullopt;

  MembershipCertificate cert{gens, std::move(*mult), A};
  if (!cert.verify()) throw std::logic_error("membership certificate failed re-multiplication");
  return cert;
}

bool linear_factor_member(const Poly& l, const Poly& l1, const Poly& l2) {
  for (const Poly* p : {&l, &l1, &l2})
    if (p->is_zero() || p->total_degree() != 1 || !p->is_homogeneous())
      throw std::invalid_argument("linear_factor_member needs linear homogeneous forms");
  Matrix base = Matrix::from_rows({l1.linear_coeffs(), l2.linear_coeffs()});
  Matrix ext = Matrix::from_rows({l1.linear_coeffs(), l2.linear_coeffs(), l.linear_coeffs()});
  return ext.rank() == base.rank();
}

namespace {

Poly product_of(const std::vector<Poly>& factors, const std::vector<int>& skip_sorted) {
  Poly p = Poly::constant(factors[0].vars(), FieldElem(1));
  size_t s = 0;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (s < skip_sorted.size() && skip_sorted[s] == int(i)) { ++s; continue; }
    p = p * factors[i];
  }
  return p;
}

// Certificate for the full product from a certificate for a partial product:
// multiply every multiplier by the complementary factors.
MembershipCertificate lift_certificate(MembershipCertificate cert, const Poly& cofactor,
                                       const Poly& full_target) {
  for (auto& m : cert.multipliers) m = m * cofactor;
  cert.target = full_target;
  if (!cert.verify()) throw std::logic_error("lifted certificate failed re-multiplication");
  return cert;
}

}  // namespace

ProductMembership product_member(const std::vector<Poly>& factors, const std::vector<Poly>& gens,
                                 MemberMode mode, int f_max) {
  if (factors.empty()) throw std::invalid_argument("product_member: empty factor list");
  const int n = factors[0].vars();
  for (const auto& f : factors)
    if (!f.is_homogeneous() || f.is_zero())
      throw std::invalid_argument("product_member: factors must be nonzero homogeneous");

  const int d = int(factors.size());
  Poly full = product_of(factors, {});

  ProductMembership res;
  if (mode == MemberMode::direct) {
    // Single factors first: one member makes the whole product a member.
    for (int j = 0; j < d; ++j) {
      if (auto cert = member_homogeneous(factors[j], gens)) {
        std::vector<int> skip{j};
        res.member = true;
        res.certificate = lift_certificate(std::move(*cert), product_of(factors, skip), full);
        return res;
      }
    }
    if (auto cert = member_homogeneous(full, gens)) {
      res.member = true;
      res.certificate = std::move(*cert);
    }
    return res;
  }

  // Subset mode: sizes 1..f_max, lexicographic subsets within each size.
  if (f_max < 0) f_max = d;
  if (f_max < 1) throw std::invalid_argument("product_member: f_max < 1");
  const int cap = std::min(f_max, d);
  std::vector<int> idx;
  for (int size = 1; size <= cap; ++size) {
    idx.assign(size, 0);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Poly sub = Poly::constant(n, FieldElem(1));
      for (int i : idx) sub = sub * factors[i];
      if (auto cert = member_homogeneous(sub, gens)) {
        std::vector<int> keep = idx;
        res.member = true;
        res.witness_subset.reserve(keep.size());
        for (int i : keep) res.witness_subset.push_back(i + 1);
        res.certificate = lift_certificate(std::move(*cert), product_of(factors, keep), full);
        return res;
      }
      // next combination
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == d - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  res.complete = (f_max >= d);
  return res;
}

}  // namespace pitlab
