#ifndef PITLAB_QUADFORM_HPP
#define PITLAB_QUADFORM_HPP

#include "pitlab/matrix.hpp"
#include "pitlab/poly.hpp"

namespace pitlab {

// Symmetric Gram matrix M with q(x) = x^T M x (characteristic 0, so the
// off-diagonal halving is exact). Requires q homogeneous of degree 2.
Matrix gram(const Poly& q);

// Rank of the Gram matrix; invariant under field extension, so it answers
// reducibility over C even though coefficients live in Q(sqrt(d)).
int quad_rank(const Poly& q);

// A homogeneous quadratic is irreducible over C iff its rank is >= 3.
bool is_irreducible_quadratic(const Poly& q);

// q with the hyperplane l = 0 substituted in: the pivot variable (first
// nonzero coefficient of l) is eliminated. Result stays in n variables with
// the pivot absent from its support.
Poly restrict_to_hyperplane(const Poly& q, const Poly& l);

}  // namespace pitlab

#endif  // PITLAB_QUADFORM_HPP
