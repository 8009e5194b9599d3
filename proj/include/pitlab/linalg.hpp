#ifndef PITLAB_LINALG_HPP
#define PITLAB_LINALG_HPP

#include <vector>

#include "pitlab/poly.hpp"

namespace pitlab {

// Rank of a polynomial matrix over the field of rational functions.
// Fraction-free elimination; the Bareiss identity keeps every division an
// exact polynomial division. Pivot: fewest-terms nonzero entry of the
// current column (deterministic tie break by row).
int symbolic_rank(const std::vector<std::vector<Poly>>& m);

// m x n Jacobian of the list: entry (i, j) = d f_i / d x_j.
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& fs);

}  // namespace pitlab

#endif  // PITLAB_LINALG_HPP
