#ifndef PITLAB_TESTS_SUPPORT_HPP
#define PITLAB_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "pitlab/circuit.hpp"
#include "pitlab/incidence.hpp"
#include "pitlab/matrix.hpp"
#include "pitlab/poly.hpp"

namespace tsup {

using namespace pitlab;

inline Poly lin(std::vector<long> cs) {
  std::vector<FieldElem> v;
  v.reserve(cs.size());
  for (long c : cs) v.push_back(FieldElem(c));
  return Poly::linear(v);
}

inline Poly mono(int n, std::vector<int> exps, FieldElem c = FieldElem(1)) {
  Poly p(n);
  p.add_term(Monomial(std::move(exps)), c);
  return p;
}

// Upper-triangle quadratic: entries (i, j, c) with i <= j.
inline Poly quad(int n, std::vector<std::tuple<int, int, long>> entries) {
  Poly p(n);
  for (auto& [i, j, c] : entries) {
    Monomial m(n);
    m.e[i] += 1;
    m.e[j] += 1;
    p.add_term(m, FieldElem(c));
  }
  return p;
}

inline Circuit circ(int n, std::vector<Term> terms, bool homogeneous = true) {
  Circuit c;
  c.n = n;
  c.homogeneous = homogeneous;
  c.terms = std::move(terms);
  return c;
}

inline bool circuits_equal(const Circuit& a, const Circuit& b) {
  if (a.n != b.n || a.homogeneous != b.homogeneous || a.terms.size() != b.terms.size()) return false;
  for (size_t t = 0; t < a.terms.size(); ++t) {
    if (!(a.terms[t].scale == b.terms[t].scale)) return false;
    if (a.terms[t].factors != b.terms[t].factors) return false;
  }
  return true;
}

// x + y + (x+2y), the fanin-3 linear fixture whose local conditions all hold.
inline Circuit counterexample31() {
  return circ(2, {Term(FieldElem(1), {lin({1, 0})}), Term(FieldElem(1), {lin({0, 1})}),
                  Term(FieldElem(1), {lin({1, 2})})});
}

// (x+y)(x-y) - x*x + y*y = 0.
inline Circuit diffsq_zero() {
  return circ(2, {Term(FieldElem(1), {lin({1, 1}), lin({1, -1})}),
                  Term(FieldElem(-1), {lin({1, 0}), lin({1, 0})}),
                  Term(FieldElem(1), {lin({0, 1}), lin({0, 1})})});
}

// x*x + y*y + z*z, not SG.
inline Circuit sum_squares() {
  return circ(3, {Term(FieldElem(1), {lin({1, 0, 0}), lin({1, 0, 0})}),
                  Term(FieldElem(1), {lin({0, 1, 0}), lin({0, 1, 0})}),
                  Term(FieldElem(1), {lin({0, 0, 1}), lin({0, 0, 1})})});
}

// x*x + y*z - (x^2 + yz) = 0, quadratic of rank 3.
inline Circuit quadzero32() {
  return circ(3, {Term(FieldElem(1), {lin({1, 0, 0}), lin({1, 0, 0})}),
                  Term(FieldElem(1), {lin({0, 1, 0}), lin({0, 0, 1})}),
                  Term(FieldElem(-1), {quad(3, {{0, 0, 1}, {1, 2, 1}})})});
}

// x*y + z*w - (xy + zw) = 0, quadratic of rank 4.
inline Circuit gap32() {
  return circ(4, {Term(FieldElem(1), {lin({1, 0, 0, 0}), lin({0, 1, 0, 0})}),
                  Term(FieldElem(1), {lin({0, 0, 1, 0}), lin({0, 0, 0, 1})}),
                  Term(FieldElem(-1), {quad(4, {{0, 1, 1}, {2, 3, 1}})})});
}

// The nine inflection points of the Fermat cubic, over Q(sqrt(-3)):
// (1,-a,0), (0,1,-b), (1,0,-c) for a, b, c over the cube roots of unity.
inline std::vector<ProjPoint> hesse_points() {
  const FieldElem one(1);
  const FieldElem omega(mpq_class(-1, 2), mpq_class(1, 2));    // primitive cube root
  const FieldElem omega2(mpq_class(-1, 2), mpq_class(-1, 2));  // its conjugate
  std::vector<ProjPoint> pts;
  for (const FieldElem& r : {one, omega, omega2}) {
    pts.push_back(ProjPoint::canonical({one, -r, FieldElem()}));
  }
  for (const FieldElem& r : {one, omega, omega2}) {
    pts.push_back(ProjPoint::canonical({FieldElem(), one, -r}));
  }
  for (const FieldElem& r : {one, omega, omega2}) {
    pts.push_back(ProjPoint::canonical({one, FieldElem(), -r}));
  }
  return pts;
}

inline FieldElem rand_elem(std::mt19937_64& rng, long lo = -4, long hi = 4) {
  const long num = lo + long(rng() % uint64_t(hi - lo + 1));
  const long den = 1 + long(rng() % 3);
  mpq_class q(num, den);
  q.canonicalize();
  const bool with_root = (rng() % 4) == 0;
  if (!with_root) return FieldElem(q);
  mpq_class b(lo + long(rng() % uint64_t(hi - lo + 1)), 1 + long(rng() % 2));
  b.canonicalize();
  return FieldElem(q, b);
}

inline Poly rand_poly(std::mt19937_64& rng, int n, int deg, int terms) {
  Poly p(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    int left = deg;
    for (int i = 0; i < n; ++i) {
      const int e = int(rng() % uint64_t(left + 1));
      m.e[i] = e;
      left -= e;
      if (left == 0) break;
    }
    p.add_term(m, FieldElem(long(rng() % 7) - 3));
  }
  return p;
}

inline Matrix rand_invertible(std::mt19937_64& rng, int n, long lo = -3, long hi = 3) {
  for (;;) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = FieldElem(lo + long(rng() % uint64_t(hi - lo + 1)));
    if (a.rank() == n) return a;
  }
}

}  // namespace tsup

#endif  // PITLAB_TESTS_SUPPORT_HPP
