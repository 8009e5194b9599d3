#ifndef PITLAB_IDEAL_HPP
#define PITLAB_IDEAL_HPP

#include <optional>
#include <vector>

#include "pitlab/poly.hpp"

namespace pitlab {

// Witness that target = sum_i generators[i] * multipliers[i], each multiplier
// homogeneous of degree deg(target) - deg(generator) or zero.
struct MembershipCertificate {
  std::vector<Poly> generators;
  std::vector<Poly> multipliers;
  Poly target;

  bool verify() const;
};

// Decides A in <gens> for homogeneous inputs. Degree-by-degree: the unknown
// multiplier coefficients form one exact linear system, one equation per
// monomial of deg(A). Linear generators are first eliminated by substituting
// their hyperplane away (the quotient map by a linear form), and a single
// remaining generator reduces to exact division; both reductions rebuild a
// certificate for the original generators. Every returned certificate is
// re-multiplied before it leaves this function.
std::optional<MembershipCertificate> member_homogeneous(const Poly& A,
                                                        const std::vector<Poly>& gens);

// l in span{l1, l2}, by a rank test on the 3 x n coefficient matrix.
bool linear_factor_member(const Poly& l, const Poly& l1, const Poly& l2);

enum class MemberMode { direct, subset };

struct ProductMembership {
  bool member = false;
  // Subset mode with f_max below the factor count can miss memberships;
  // complete = false marks such a "not found" answer.
  bool complete = true;
  std::vector<int> witness_subset;  // 1-based, subset mode only
  std::optional<MembershipCertificate> certificate;  // target = full product
};

// Decides prod(factors) in <gens>. direct: one membership test at full
// degree (complete). subset: smallest subsets first, first hit wins,
// complete only when f_max covers all factors. f_max < 0 means "all".
ProductMembership product_member(const std::vector<Poly>& factors, const std::vector<Poly>& gens,
                                 MemberMode mode, int f_max = -1);

}  // namespace pitlab

#endif  // PITLAB_IDEAL_HPP
