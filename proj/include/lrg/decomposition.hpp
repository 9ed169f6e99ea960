#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "lrg/plainness.hpp"
#include "lrg/torsion.hpp"

namespace lrg {

using BigInt = boost::multiprecision::cpp_int;

/// A dense integer matrix with exact entries.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const BigInt& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

/// Diagonal of the Smith Normal Form: non-negative invariant factors
/// d1 | d2 | ... with zeros trailing, of length min(rows, cols).
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// One representative of a conjugacy class of maximal finite subgroups,
/// with the full subgroup realized inside B(rt+2).
struct SubgroupRecord {
  Word representative;          // shortlex-least list entry that found it
  std::vector<Word> elements;   // shortlex order, identity first
  long long order = 0;
  std::vector<Word> generators;
};

struct Decomposition {
  std::vector<SubgroupRecord> subgroups;
  int free_rank = 0;
  /// False when the conjugacy scan radius was truncated below 11 * lt
  /// without the ball saturating; such results are heuristic.
  bool complete = true;

  int k() const { return static_cast<int>(subgroups.size()); }
};

struct DecomposeOptions {
  /// Radius of the "is u's maximal finite subgroup wholly short?" scan.
  /// Defaults to the sound value 11 * lt; smaller values mark the result
  /// incomplete.
  std::optional<int> scan_radius;
  std::size_t max_elements = kDefaultBallCap;
};

/// Shortlex-least nontrivial members of one maximal finite subgroup per
/// conjugacy class, found by scanning B(rt+2). A candidate u is rejected
/// when some finite-order t outside B(rt+2) (within the scan radius) has tu
/// of finite order (u's subgroup is not wholly short), or when some t in
/// B(5 rt + 4) conjugates u next to an already-listed representative h
/// (t u t^-1 h of finite order).
std::vector<Word> maximal_subgroup_representatives(
    const RewritingSystem& sys, const OrderOracle& oracle,
    const DecomposeOptions& opts = {}, bool* truncated = nullptr);

/// All of the subgroup containing list entry v: the identity plus every
/// u in B(rt+2) with u and u v both of finite order.
std::vector<Word> recover_subgroup(const RewritingSystem& sys, const Word& v,
                                   const OrderOracle& oracle,
                                   std::size_t max_elements = kDefaultBallCap);

/// Greedy generating set: scan the subgroup in shortlex order and keep each
/// element not generated by the ones already kept. The result has at most
/// log2(order) members since every kept generator at least doubles the
/// generated subgroup. Throws std::invalid_argument if the input set is not
/// closed under reduced multiplication.
std::vector<Word> generating_set(const RewritingSystem& sys,
                                 const std::vector<Word>& elements);

/// Exponent-sum relation matrix over one letter per inverse pair
/// (involutions count as their own pair), one row per rule from lhs * rhs^-1.
IntMatrix relation_matrix(const RewritingSystem& sys);

/// Free rank of the abelianization: the number of zero invariant factors of
/// the relation matrix.
int abelianization_rank(const RewritingSystem& sys);

/// Full free-product decomposition data. The caller asserts plainness.
/// Systems with rt == 0 are decomposed directly: each involution letter is a
/// Z2 factor and each non-involution inverse pair a Z factor.
Decomposition decompose(const RewritingSystem& sys, const OrderOracle& oracle,
                        const DecomposeOptions& opts = {});

}  // namespace lrg
