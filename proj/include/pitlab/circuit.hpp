#ifndef PITLAB_CIRCUIT_HPP
#define PITLAB_CIRCUIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "pitlab/poly.hpp"

namespace pitlab {

// One product gate: scale * factor_1 * ... * factor_m. Parsed terms always
// have at least one factor; normalization may strip a term down to its
// scale (empty factor list = constant term).
struct Term {
  FieldElem scale;
  std::vector<Poly> factors;

  Term() : scale(1) {}
  Term(FieldElem s, std::vector<Poly> fs) : scale(std::move(s)), factors(std::move(fs)) {}

  int degree() const;
  Poly product(int n) const;  // scale * prod factors, expanded
};

// Sum of k product terms over n variables; the bottom layer consists of the
// explicit factors, each of degree in [1, r].
struct Circuit {
  int n = 0;
  bool homogeneous = false;
  std::vector<Term> terms;

  int k() const { return int(terms.size()); }
  // Max factor degree actually present (the model's r).
  int max_factor_degree() const;
  bool all_factors_linear() const;
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity;
  std::string code;
  std::string message;
};

// Structural checks: homogeneity of factors and terms when flagged, degree
// bounds, and - for quadratic factors - irreducibility via Gram rank >= 3.
// Degree >= 3 factors cannot be checked and are flagged "unverified".
std::vector<Diagnostic> validate(const Circuit& c, int declared_r = 0);

bool has_errors(const std::vector<Diagnostic>& diags);

enum class VerdictStatus { ZERO, NONZERO, INDETERMINATE };

struct EarlyVerdict {
  VerdictStatus status;
  std::string reason;
  Poly shared_factor;  // the factor two terms share and the third lacks
  int term_a = -1, term_b = -1, term_missing = -1;
};

struct NormalizationReport {
  std::vector<Poly> removed_gcd_factors;
  std::optional<EarlyVerdict> early_verdict;
  Circuit circuit;
};

// Strips factors common (up to scalar) to every term, repeatedly; for k = 3
// additionally short-circuits to NONZERO when two terms share a factor the
// third lacks. Result has gcd 1 and, for k = 3, pairwise coprime terms.
NormalizationReport normalize(const Circuit& c);

// Adds one variable and lifts every factor and term so the result is
// homogeneous; evaluating the new variable at 1 recovers the input.
Circuit homogenize(const Circuit& c);

}  // namespace pitlab

#endif  // PITLAB_CIRCUIT_HPP
