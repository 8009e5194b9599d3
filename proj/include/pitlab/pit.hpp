#ifndef PITLAB_PIT_HPP
#define PITLAB_PIT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pitlab/circuit.hpp"
#include "pitlab/errors.hpp"
#include "pitlab/sg.hpp"

namespace pitlab {

enum class CertificateKind {
  expansion_empty,            // ZERO: complete expansion vanished
  nonzero_monomial,           // NONZERO: explicit surviving monomial
  failed_necessary_condition, // NONZERO: a condition forced by zero-ness failed
  sg_witness,                 // NONZERO: circuit is not SG
  early_normalization,        // NONZERO: two of three terms share a prime factor
  resource                    // INDETERMINATE: budget exhausted
};

const char* certificate_kind_name(CertificateKind k);

struct Verdict {
  VerdictStatus status = VerdictStatus::INDETERMINATE;
  CertificateKind kind = CertificateKind::resource;

  // Payloads; which are set depends on kind.
  std::optional<Monomial> witness_monomial;  // in reduced variables when reduction happened
  std::optional<FieldElem> witness_coeff;
  std::string condition;                     // failing necessary-condition instance
  std::optional<SgWitness> sg;
  std::optional<Poly> shared_factor;

  // Observed violations of claimed bounds, e.g.
  // "paper_claim_violated=quad_rank_neq_3 rank=4".
  std::vector<std::string> diagnostics;
  // Deterministic key=value details (dimensions, pipeline notes).
  std::vector<std::pair<std::string, std::string>> info;
};

struct PipelineConfig {
  int f_max = -1;                      // subset-membership bound; -1 = all factors
  long grid_budget = 200000;           // faithful_reduce candidate budget
  size_t expansion_budget = 2000000;   // max stored monomials during expansion
  bool strict_oracle = false;          // callers cross-check every verdict
};

// Ground truth at desk scale: fully expands the circuit. ZERO iff the
// expansion is empty; otherwise the graded-lex leading monomial is the
// witness. Throws ResourceExceeded when the budget is hit.
Verdict oracle_expand(const Circuit& c, size_t expansion_budget = 2000000);

// Product of linear forms, top fanin 3. Normalizes, enforces the pairwise
// span conditions (each a consequence of zero-ness via the primality of an
// ideal generated by two independent linear forms), then expands in a basis
// of the span of all factors.
Verdict pit31(const Circuit& c, const PipelineConfig& cfg = {});

// Top fanin 3, first two terms products of linear forms, third containing
// at least one irreducible quadratic; degree <= 2 everywhere. All-linear
// inputs are delegated to pit31.
Verdict pit32(const Circuit& c, const PipelineConfig& cfg = {});

// Any homogeneous bounded-fanin circuit: not SG certifies NONZERO; SG
// circuits are reduced to trdeg-many variables by a rank-preserving
// substitution and expanded.
Verdict pit_general(const Circuit& c, const PipelineConfig& cfg = {});

// Basis (rows) of the smallest linear space of forms supporting every
// factor: linear factor coefficient vectors plus Gram row spaces of the
// quadratics. Factors must have degree <= 2.
Matrix essential_space(const Circuit& c);

enum class PipelineKind { p31, p32, general };
const char* pipeline_name(PipelineKind k);

// Auto-detection order: (3,1) shape, then the (3,2) subclass, then general.
PipelineKind detect_pipeline(const Circuit& c);

Verdict run_pipeline(PipelineKind kind, const Circuit& c, const PipelineConfig& cfg = {});

}  // namespace pitlab

#endif  // PITLAB_PIT_HPP
