#include "pitlab/gen.hpp"

#include <random>
#include <stdexcept>

namespace pitlab {

namespace {

long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + long(rng() % uint64_t(hi - lo + 1));
}

long rand_nonzero(std::mt19937_64& rng, long lo, long hi) {
  for (;;) {
    long v = rand_in(rng, lo, hi);
    if (v != 0) return v;
  }
}

Poly random_linear(std::mt19937_64& rng, int n, long lo, long hi) {
  for (;;) {
    std::vector<FieldElem> c(n);
    for (int i = 0; i < n; ++i) c[i] = FieldElem(rand_in(rng, lo, hi));
    Poly p = Poly::linear(c);
    if (!p.is_zero()) return p;
  }
}

Poly random_quadratic(std::mt19937_64& rng, int n, long lo, long hi) {
  for (;;) {
    Poly p(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        long v = rand_in(rng, lo, hi);
        if (v == 0) continue;
        Monomial m(n);
        m.e[i] += 1;
        m.e[j] += 1;
        p.add_term(m, FieldElem(v));
      }
    }
    if (!p.is_zero()) return p;
  }
}

}  // namespace

Circuit gen_random_circuit(uint64_t seed, const RandomCircuitParams& p) {
  if (p.n < 1 || p.k < 1 || p.r < 1 || p.degree < 1 || p.coeff_lo > p.coeff_hi)
    throw std::invalid_argument("bad random circuit parameters");
  std::mt19937_64 rng(seed);
  Circuit c;
  c.n = p.n;
  c.homogeneous = true;
  for (int t = 0; t < p.k; ++t) {
    Term term;
    term.scale = FieldElem(rand_nonzero(rng, p.coeff_lo, p.coeff_hi));
    int left = p.degree;
    while (left > 0) {
      const int maxd = std::min(p.r, left);
      const int d = int(rand_in(rng, 1, maxd));
      term.factors.push_back(d == 1 ? random_linear(rng, p.n, p.coeff_lo, p.coeff_hi)
                                    : random_quadratic(rng, p.n, p.coeff_lo, p.coeff_hi));
      left -= d;
    }
    c.terms.push_back(std::move(term));
  }
  return c;
}

namespace {

// Templates are (k, template variable count, term list) with hand-checked
// zero expansions.
Circuit template_circuit(int id) {
  auto lin = [](int n, std::initializer_list<long> cs) {
    std::vector<FieldElem> v;
    for (long c : cs) v.push_back(FieldElem(c));
    (void)n;
    return Poly::linear(v);
  };
  auto quad = [](int n, std::initializer_list<std::pair<std::pair<int, int>, long>> entries) {
    Poly p(n);
    for (const auto& [ij, c] : entries) {
      Monomial m(n);
      m.e[ij.first] += 1;
      m.e[ij.second] += 1;
      p.add_term(m, FieldElem(c));
    }
    return p;
  };

  Circuit c;
  c.homogeneous = true;
  switch (id) {
    case 0:  // (x+y)(x-y) - x*x + y*y
      c.n = 2;
      c.terms = {Term(FieldElem(1), {lin(2, {1, 1}), lin(2, {1, -1})}),
                 Term(FieldElem(-1), {lin(2, {1, 0}), lin(2, {1, 0})}),
                 Term(FieldElem(1), {lin(2, {0, 1}), lin(2, {0, 1})})};
      return c;
    case 1:  // x*x + y*z - (x^2 + yz), quadratic of rank 3
      c.n = 3;
      c.terms = {Term(FieldElem(1), {lin(3, {1, 0, 0}), lin(3, {1, 0, 0})}),
                 Term(FieldElem(1), {lin(3, {0, 1, 0}), lin(3, {0, 0, 1})}),
                 Term(FieldElem(-1), {quad(3, {{{0, 0}, 1}, {{1, 2}, 1}})})};
      return c;
    case 2:  // x*y + z*w - (xy + zw), quadratic of rank 4
      c.n = 4;
      c.terms = {Term(FieldElem(1), {lin(4, {1, 0, 0, 0}), lin(4, {0, 1, 0, 0})}),
                 Term(FieldElem(1), {lin(4, {0, 0, 1, 0}), lin(4, {0, 0, 0, 1})}),
                 Term(FieldElem(-1), {quad(4, {{{0, 1}, 1}, {{2, 3}, 1}})})};
      return c;
    case 3:  // (2x)*y - x*(2y)
      c.n = 2;
      c.terms = {Term(FieldElem(1), {lin(2, {2, 0}), lin(2, {0, 1})}),
                 Term(FieldElem(-1), {lin(2, {1, 0}), lin(2, {0, 2})})};
      return c;
    case 4:  // (x+y)(x-y) - (x^2 - 2y^2) - y*y
      c.n = 2;
      c.terms = {Term(FieldElem(1), {lin(2, {1, 1}), lin(2, {1, -1})}),
                 Term(FieldElem(-1), {quad(2, {{{0, 0}, 1}, {{1, 1}, -2}})}),
                 Term(FieldElem(-1), {lin(2, {0, 1}), lin(2, {0, 1})})};
      return c;
    default:
      throw std::invalid_argument("unknown zero template " + std::to_string(id));
  }
}

}  // namespace

int zero_template_count() { return 5; }

ZeroCircuit gen_zero_circuit(uint64_t seed, int n, int template_id) {
  std::mt19937_64 rng(seed);
  if (template_id < 0) template_id = int(rng() % uint64_t(zero_template_count()));
  Circuit tpl = template_circuit(template_id);
  if (n < tpl.n)
    throw std::invalid_argument("target variable count below template's " + std::to_string(tpl.n));

  // Full-row-rank integer embedding keeps every factor nonzero; any ring
  // homomorphism keeps the sum zero.
  Matrix a;
  for (;;) {
    a = Matrix(tpl.n, n);
    for (int i = 0; i < tpl.n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = FieldElem(rand_in(rng, -2, 2));
    if (a.rank() == tpl.n) break;
  }

  ZeroCircuit out;
  out.template_id = template_id;
  out.embedding = a;
  out.circuit.n = n;
  out.circuit.homogeneous = true;
  for (const auto& t : tpl.terms) {
    Term nt;
    nt.scale = t.scale;
    for (const auto& f : t.factors) nt.factors.push_back(f.substitute_linear(a));
    out.circuit.terms.push_back(std::move(nt));
  }
  return out;
}

std::vector<CorpusItem> make_corpus(uint64_t seed0, int count, int zero_count) {
  if (zero_count > count) throw std::invalid_argument("zero_count exceeds count");
  std::vector<CorpusItem> out;
  out.reserve(count);

  for (int i = 0; i < zero_count; ++i) {
    const uint64_t seed = seed0 + uint64_t(i);
    const int tpl = i % zero_template_count();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const int tpl_n = template_circuit(tpl).n;
    const int n = tpl_n + int(rng() % uint64_t(7 - tpl_n));  // up to 6
    ZeroCircuit z = gen_zero_circuit(seed, n, tpl);
    out.push_back({seed, "zero:" + std::to_string(tpl), std::move(z.circuit)});
  }

  for (int i = zero_count; i < count; ++i) {
    const uint64_t seed = seed0 + uint64_t(i);
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
    const int cls = i % 6;
    RandomCircuitParams p;
    switch (cls) {
      case 0:  // small fanin-2 linear
        p = {2 + int(rng() % 3), 2, 1, 2 + int(rng() % 3)};
        break;
      case 1:  // fanin-3 all linear
        p = {2 + int(rng() % 4), 3, 1, 2 + int(rng() % 4)};
        break;
      case 2:  // fanin-3 all linear at the size bound
        p = {6, 3, 1, 8};
        break;
      case 3:  // quadratics allowed, small ambient space
        p = {2 + int(rng() % 3), 3, 2, 2 + int(rng() % 5)};
        break;
      case 4:  // fanin 2 with quadratics
        p = {2 + int(rng() % 3), 2, 2, 2 + int(rng() % 5)};
        break;
      case 5:  // larger ambient space, degree capped
        p = {5 + int(rng() % 2), 3, 2, 2 + int(rng() % 3)};
        break;
    }
    out.push_back({seed, "random:" + std::to_string(cls), gen_random_circuit(seed, p)});
  }
  return out;
}

}  // namespace pitlab
