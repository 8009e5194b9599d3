#ifndef PITLAB_SG_HPP
#define PITLAB_SG_HPP

#include <optional>
#include <vector>

#include "pitlab/circuit.hpp"
#include "pitlab/ideal.hpp"
#include "pitlab/matrix.hpp"

namespace pitlab {

struct SgWitness {
  int term_index = -1;                 // 0-based term whose product escapes the ideal
  std::vector<int> factor_choice;     // 0-based factor index per other term, ascending term order
};

struct SgReport {
  bool is_sg = false;
  std::optional<SgWitness> witness;
};

// For every term index i and every way of choosing one factor from each of
// the other terms, tests F_i in <chosen factors>. Witnesses are reported in
// lexicographic (i, tuple) order, so failures are reproducible.
SgReport sg_check(const Circuit& c, MemberMode mode = MemberMode::direct, int f_max = -1);

struct TrdegReport {
  int value = 0;
  std::vector<int> basis;  // 0-based indices of one maximal independent subset
  int jacobian_rank = 0;
};

// Transcendence degree via the Jacobian criterion (characteristic 0):
// value = rank of the m x n Jacobian over the rational function field.
TrdegReport trdeg(const std::vector<Poly>& polys);

// Searches for a nonzero F of total degree <= max_degree with
// F(f_1, ..., f_m) = 0 by expanding all monomials in the f_i and solving for
// a kernel vector. Independent cross-check for trdeg; desk scale only.
std::optional<Poly> dependence_oracle(const std::vector<Poly>& polys, int max_degree);

struct FaithfulMap {
  Matrix substitution;  // n rows (old variables) x tau columns
  int grid = 0;         // grid level that produced it
};

// Deterministic search for a linear substitution into tau variables that
// preserves the symbolic Jacobian rank of the list (rank preservation is the
// operational notion of a faithful reduction here). Candidate order:
// coordinate projections, then Vandermonde rows beta_i^j over integer grids
// of doubling side, then general integer matrices from the same grid.
FaithfulMap faithful_reduce(const std::vector<Poly>& polys, int tau, long candidate_budget = 200000);

}  // namespace pitlab

#endif  // PITLAB_SG_HPP
