#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrg/decomposition.hpp"

namespace lrg {

/// An abstract finite group as a multiplication table. Index 0 is the
/// identity. Construction validates the identity and inverse laws and
/// checks associativity (exhaustively up to a size threshold).
struct FiniteGroupTable {
  int n = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  std::vector<int> element_orders;

  static FiniteGroupTable from_mult(std::vector<std::vector<int>> mult);
};

/// Realizes a recovered subgroup as an abstract table: elements indexed in
/// shortlex order with the identity at 0, products by reduce. A product
/// escaping the element set signals a corrupted record and throws.
FiniteGroupTable table_from_subgroup(const RewritingSystem& sys,
                                     const SubgroupRecord& rec);

inline constexpr int kDefaultIsoOrderCap = 512;

/// Isomorphism of finite groups by backtracking over images of a greedy
/// generating set, pruned by element-order multisets and incremental
/// consistency. Returns an index bijection preserving multiplication, or
/// nothing. Throws resource_limit_error past order_cap.
std::optional<std::vector<int>> finite_iso(const FiniteGroupTable& a,
                                           const FiniteGroupTable& b,
                                           int order_cap = kDefaultIsoOrderCap);

struct IsoCertificate {
  std::string kind;  // "q" | "k" | "orders" | "unmatched_factor"
  std::string message;
};

struct IsoVerdict {
  bool isomorphic = false;
  int q_a = 0, q_b = 0;
  std::vector<long long> orders_a, orders_b;  // finite factor orders, sorted
  /// matching[i] = index of the factor of B matched with factor i of A
  std::optional<std::vector<int>> matching;
  std::optional<IsoCertificate> certificate;
  bool complete = true;  // both decompositions ran at full scan radius
};

/// Free ranks equal, factor counts equal, and a perfect matching of finite
/// factors under finite_iso. The certificate reports the first invariant
/// that differs: free rank, factor count, order multiset, or an unmatched
/// factor.
IsoVerdict plain_iso(const RewritingSystem& sys_a,
                     const RewritingSystem& sys_b,
                     const DecomposeOptions& opts = {},
                     int order_cap = kDefaultIsoOrderCap);

}  // namespace lrg
