#ifndef PITLAB_INCIDENCE_HPP
#define PITLAB_INCIDENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pitlab/circuit.hpp"
#include "pitlab/matrix.hpp"

namespace pitlab {

// Projective point stored in canonical form: first nonzero coordinate
// normalized to 1, so equality up to scalar is structural equality.
struct ProjPoint {
  std::vector<FieldElem> c;

  static ProjPoint canonical(std::vector<FieldElem> coords);
  bool operator==(const ProjPoint& o) const { return c == o.c; }
};

// Named pairwise-disjoint sets of points in the same ambient space.
struct Configuration {
  int n = 0;
  std::vector<std::pair<std::string, std::vector<ProjPoint>>> sets;

  size_t point_count() const;
};

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// Vector-space dimension of the span of all coordinate vectors
// (projective dimension is this minus one).
int span_dim(const Configuration& cfg);

struct LineHit {
  int set = -1;
  int point = -1;
};

// All configuration points on the projective line through p and q (p != q).
std::vector<LineHit> line_points(const ProjPoint& p, const ProjPoint& q, const Configuration& cfg);

struct TwoSetLine {
  int set_a = -1, point_a = -1;
  int set_b = -1, point_b = -1;
  std::vector<LineHit> on_line;
};

// Exhaustive scan over cross-set pairs, lexicographic order; returns the
// first line whose points touch exactly two of the sets.
std::optional<TwoSetLine> find_line_two_sets(const Configuration& cfg);

// Exhaustive scan for a line containing exactly two of the points.
std::optional<std::pair<int, int>> find_ordinary_line(const std::vector<ProjPoint>& points);

struct CircuitConfiguration {
  Configuration cfg;
  std::vector<std::string> notices;  // skipped non-linear factors
};

// Set i = canonical points of the linear factors of term i. Within-set
// duplicates collapse; a cross-set duplicate (non-coprime terms) throws.
CircuitConfiguration circuit_to_configuration(const Circuit& c);

}  // namespace pitlab

#endif  // PITLAB_INCIDENCE_HPP
