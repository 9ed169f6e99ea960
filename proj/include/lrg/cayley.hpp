#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <unordered_map>
#include <vector>

#include "lrg/rewriting.hpp"
#include "lrg/word.hpp"

namespace lrg {

inline constexpr std::size_t kDefaultBallCap = 5'000'000;

/// All normal forms of length <= radius, in shortlex order with the empty
/// word at index 0. For a convergent system every normal form of length d+1
/// is its length-d prefix extended by one letter, which gives the BFS parent
/// links directly.
struct Ball {
  int radius = 0;
  bool saturated = false;  // a BFS layer came up empty: the group is finite
                           // and fully contained here
  bool capped = false;     // truncated at the element cap (partial builds)
  std::vector<Word> elements;
  std::vector<int> parent;         // parent[0] == -1
  std::vector<int> parent_letter;  // parent_letter[0] == -1
  std::vector<std::size_t> layer_offsets;  // layer d = [offsets[d], offsets[d+1])
  std::unordered_map<Word, int, WordHash> index;

  std::size_t size() const { return elements.size(); }
  int find(const Word& nf) const {
    auto it = index.find(nf);
    return it == index.end() ? -1 : it->second;
  }
  /// Number of elements of length exactly d.
  std::size_t layer_size(int d) const {
    return layer_offsets[d + 1] - layer_offsets[d];
  }
};

/// BFS from the identity. Throws resource_limit_error past max_elements.
Ball build_ball(const RewritingSystem& sys, int radius,
                std::size_t max_elements = kDefaultBallCap);

/// Like build_ball, but on hitting the cap truncates at the last fully
/// completed layer instead of throwing; `radius` and `capped` record that.
Ball build_ball_partial(const RewritingSystem& sys, int radius,
                        std::size_t max_elements = kDefaultBallCap);

/// Undirected adjacency restricted to the ball: adj[i] lists (j, letter)
/// with elements[i] * letter == elements[j].
std::vector<std::vector<std::pair<int, int>>> ball_adjacency(
    const RewritingSystem& sys, const Ball& ball);

/// Graph distance |reduce(inverse(g) h)|; exact, independent of any ball.
long long distance(const RewritingSystem& sys, const Word& g, const Word& h);

struct GeodeticReport {
  bool geodetic = true;
  long long pairs_checked = 0;
  std::optional<std::pair<Word, Word>> witness;  // first pair with 2+ geodesics
  long long witness_count = 0;
};

/// Counts geodesics between all ordered pairs (g, h) of ball elements whose
/// geodesics provably stay inside the ball (d(g,h) + max(|g|,|h|) <= radius)
/// with a layered DP over the ball adjacency. Geodetic iff every count is 1.
GeodeticReport check_geodetic(const RewritingSystem& sys, int radius,
                              std::size_t max_elements = kDefaultBallCap);

/// A geodesic triangle based at the identity: corners (identity, B, C) and
/// the three geodesic side words side_ab (identity->B), side_bc (B->C),
/// side_ca (C->identity). side_ab * side_bc * side_ca spells the identity.
struct GeodesicTriangle {
  Word corner_b;
  Word corner_c;
  Word side_ab;
  Word side_bc;
  Word side_ca;

  int max_side() const {
    return static_cast<int>(
        std::max({side_ab.size(), side_bc.size(), side_ca.size()}));
  }
};

/// All non-degenerate geodesic triangles with one corner at the identity,
/// the other two corners in the ball, and every side of length <= side_cap.
/// Non-degenerate means the corners are pairwise distinct and the three
/// sides meet only at their shared corners. Triangles based elsewhere are
/// translates of these by vertex-transitivity.
std::vector<GeodesicTriangle> enumerate_triangles(
    const RewritingSystem& sys, int radius, int side_cap,
    std::size_t max_elements = kDefaultBallCap);

struct NdtReport {
  bool holds = true;
  int k = 0;
  int max_side_found = 0;
  std::optional<GeodesicTriangle> witness;  // first triangle with a side > k
  long long triangles_found = 0;
};

/// Checks that no non-degenerate geodesic triangle with corners in the ball
/// has a side longer than k.
NdtReport check_ndt_bound(const RewritingSystem& sys, int radius, int k,
                          std::size_t max_elements = kDefaultBallCap);

struct BroomlikeReport {
  bool holds = true;
  int s = 0;
  std::optional<Word> witness_u;  // geodesic u and letter x with
  int witness_letter = -1;        // |reduce(ux)| == |u| whose replacement
  std::optional<Word> witness_w;  // geodesic loses more than s trailing
  long long cases_checked = 0;    // vertices of u
};

/// For every geodesic u with |u| <= radius-1 and letter x such that ux spells
/// an element of length |u| again, checks that u and reduce(ux) share a
/// common prefix of length at least |u| - s.
BroomlikeReport check_broomlike(const RewritingSystem& sys, int radius, int s,
                                std::size_t max_elements = kDefaultBallCap);

/// Rebuilds a rewriting system from ball geometry: one rule (ab, empty) per
/// letter pair spelling the identity, plus one rule (u x, v) for every
/// non-degenerate geodesic triangle with sides (u, x, inverse of v) where x
/// is a single letter. Requires radius >= k+2, a geodetic ball, and no
/// non-degenerate triangle side exceeding k; the result is normalized.
RewritingSystem synthesize_rules(const RewritingSystem& sys, int radius,
                                 int k,
                                 std::size_t max_elements = kDefaultBallCap);

}  // namespace lrg
