#ifndef PITLAB_GEN_HPP
#define PITLAB_GEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pitlab/circuit.hpp"
#include "pitlab/matrix.hpp"

namespace pitlab {

struct RandomCircuitParams {
  int n = 3;             // variable count
  int k = 3;             // term count
  int r = 2;             // max factor degree
  int degree = 4;        // total degree of every term (homogeneous output)
  long coeff_lo = -3;    // coefficient box
  long coeff_hi = 3;
};

// Deterministic pseudo-random homogeneous circuit; identical seeds yield
// identical circuits.
Circuit gen_random_circuit(uint64_t seed, const RandomCircuitParams& p);

struct ZeroCircuit {
  Circuit circuit;
  int template_id = 0;
  Matrix embedding;  // template variables -> n variables, full row rank
};

int zero_template_count();
// Hand-verified zero template (small k, r) pushed through a seeded
// full-row-rank linear change of variables into n variables. Zero-ness is
// preserved by the substitution homomorphism, so the oracle can confirm the
// construction independently.
ZeroCircuit gen_zero_circuit(uint64_t seed, int n, int template_id = -1);

struct CorpusItem {
  uint64_t seed = 0;
  std::string kind;  // "zero:<template>" or "random:<class>"
  Circuit circuit;
};

// Seeded mixed corpus: zero_count constructed zero circuits, the rest
// random over a rotation of shape classes (k <= 3, r <= 2, n <= 6,
// degree <= 8). Shapes with quadratics in more than one term stay small so
// the exhaustive membership solves stay fast.
std::vector<CorpusItem> make_corpus(uint64_t seed0, int count, int zero_count);

}  // namespace pitlab

#endif  // PITLAB_GEN_HPP
