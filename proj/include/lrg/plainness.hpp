#pragma once

#include <optional>
#include <vector>

#include "lrg/torsion.hpp"

namespace lrg {

/// A triple certifying that the finite-order product relation is not
/// transitive: u, v, w, uv, vw all spell finite-order elements while uw
/// spells one of infinite order.
struct NonTransitiveTriple {
  Word u, v, w;
};

struct PlainnessVerdict {
  bool plain = true;
  int radius_searched = 0;
  /// True when the search covered everything it ever needs to: either the
  /// radius reached 11 * (max lhs length), or the ball saturated (finite
  /// group).
  bool complete = false;
  std::optional<NonTransitiveTriple> witness;
  long long finite_order_count = 0;
};

/// Certificate check: u, v, w nonempty normal forms of length at most
/// 11 * lt, and the oracle must report u, v, w, uv, vw finite and uw
/// infinite (products are reduced before querying). Length or emptiness
/// violations throw std::invalid_argument.
bool verify_witness(const RewritingSystem& sys, const Word& u, const Word& v,
                    const Word& w, const OrderOracle& oracle);

/// Nontrivial finite-order elements of the radius ball, in shortlex order.
std::vector<Word> finite_order_elements(const RewritingSystem& sys,
                                        int radius, const OrderOracle& oracle,
                                        std::size_t max_elements = kDefaultBallCap);

/// Exhaustive witness search over ordered triples of nontrivial finite-order
/// elements of the ball; the radius is clamped to 11 * lt, past which no new
/// witnesses can appear. The returned witness (if any) is the
/// lexicographically first under shortlex per component.
PlainnessVerdict search_witness(const RewritingSystem& sys, int radius,
                                const OrderOracle& oracle,
                                std::size_t max_elements = kDefaultBallCap);

struct TransitivityReport {
  int radius = 0;
  long long finite_order_count = 0;
  long long pairs_related = 0;
  std::vector<NonTransitiveTriple> violations;
};

/// Audits transitivity of the relation directly: for all related pairs
/// (a,b), (b,c) among finite-order ball elements, a must relate to c. The
/// violation list carries the same information as search_witness.
TransitivityReport transitivity_scan(const RewritingSystem& sys, int radius,
                                     const OrderOracle& oracle,
                                     std::size_t max_elements = kDefaultBallCap);

}  // namespace lrg
