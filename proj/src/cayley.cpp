#include "lrg/cayley.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "lrg/errors.hpp"

namespace lrg {

Ball build_ball(const RewritingSystem& sys, int radius,
                std::size_t max_elements) {
  if (radius < 0) throw std::invalid_argument("negative ball radius");
  Ball b;
  b.radius = radius;
  b.elements.push_back({});
  b.index.emplace(Word{}, 0);
  b.parent.push_back(-1);
  b.parent_letter.push_back(-1);
  b.layer_offsets = {0, 1};

  const int nletters = static_cast<int>(sys.alphabet().size());
  for (int d = 0; d < radius; ++d) {
    std::size_t begin = b.layer_offsets[d];
    std::size_t end = b.layer_offsets[d + 1];
    // Parents are scanned in shortlex order and letters ascending, so the
    // new layer comes out in shortlex order without sorting: a length-(d+1)
    // normal form is literally its parent word plus one letter.
    for (std::size_t e = begin; e < end; ++e) {
      for (int x = 0; x < nletters; ++x) {
        if (!sys.irreducible_extension(b.elements[e], x)) continue;
        if (b.elements.size() >= max_elements)
          throw resource_limit_error(
              "ball element cap exceeded (" + std::to_string(max_elements) +
              ") at radius " + std::to_string(d + 1));
        Word child = b.elements[e];
        child.push_back(x);
        int idx = static_cast<int>(b.elements.size());
        b.index.emplace(child, idx);
        b.elements.push_back(std::move(child));
        b.parent.push_back(static_cast<int>(e));
        b.parent_letter.push_back(x);
      }
    }
    b.layer_offsets.push_back(b.elements.size());
    if (b.layer_offsets[d + 2] == b.layer_offsets[d + 1]) {
      b.saturated = true;
      break;
    }
  }
  while (static_cast<int>(b.layer_offsets.size()) < radius + 2)
    b.layer_offsets.push_back(b.elements.size());
  return b;
}

std::vector<std::vector<std::pair<int, int>>> ball_adjacency(
    const RewritingSystem& sys, const Ball& ball) {
  std::vector<std::vector<std::pair<int, int>>> adj(ball.size());
  const int nletters = static_cast<int>(sys.alphabet().size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (int x = 0; x < nletters; ++x) {
      Word n = ball.elements[i];
      n.push_back(x);
      int j = ball.find(sys.reduce(std::move(n)));
      if (j >= 0) adj[i].push_back({j, x});
    }
  }
  return adj;
}

long long distance(const RewritingSystem& sys, const Word& g, const Word& h) {
  return static_cast<long long>(
      sys.reduce(concat(sys.inverse_word(g), h)).size());
}

GeodeticReport check_geodetic(const RewritingSystem& sys, int radius,
                              std::size_t max_elements) {
  Ball ball = build_ball(sys, radius, max_elements);
  auto adj = ball_adjacency(sys, ball);
  const int n = static_cast<int>(ball.size());

  GeodeticReport rep;
  std::vector<int> dist(n);
  std::vector<long long> count(n);
  std::vector<int> order(n);
  for (int g = 0; g < n; ++g) {
    const Word& gw = ball.elements[g];
    Word ginv = sys.inverse_word(gw);
    int glen = static_cast<int>(gw.size());
    for (int v = 0; v < n; ++v)
      dist[v] =
          static_cast<int>(sys.reduce(concat(ginv, ball.elements[v])).size());

    // Layered geodesic-count DP over the ball subgraph. Counts are exact
    // for every target h that passes the containment guard below, because
    // all geodesics between such pairs stay inside the ball.
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] < dist[b]; });
    std::fill(count.begin(), count.end(), 0);
    count[g] = 1;
    for (int v : order) {
      if (v == g) continue;
      long long c = 0;
      for (auto [u, x] : adj[v]) {
        (void)x;
        if (dist[u] == dist[v] - 1) c += count[u];
      }
      count[v] = c;
    }

    for (int h = 0; h < n; ++h) {
      int hlen = static_cast<int>(ball.elements[h].size());
      if (dist[h] + std::max(glen, hlen) > radius) continue;
      ++rep.pairs_checked;
      if (count[h] != 1) {
        rep.geodetic = false;
        rep.witness = {gw, ball.elements[h]};
        rep.witness_count = count[h];
        return rep;
      }
    }
  }
  return rep;
}

namespace {

// Visits the non-degenerate triangles (identity, B, C) in shortlex order of
// (B, C); stops early if the callback returns false. Side vertices are
// computed with reduce, so sides may leave the ball without harm; only the
// two free corners are required to lie inside it.
template <typename Fn>
void scan_triangles(const RewritingSystem& sys, const Ball& ball,
                    int side_cap, Fn&& fn) {
  const int n = static_cast<int>(ball.size());
  std::vector<Word> side_bc_vertices;
  for (int bi = 1; bi < n; ++bi) {
    const Word& b = ball.elements[bi];
    if (static_cast<int>(b.size()) > side_cap) break;  // shortlex order
    Word binv = sys.inverse_word(b);
    for (int ci = 1; ci < n; ++ci) {
      if (ci == bi) continue;
      const Word& c = ball.elements[ci];
      if (static_cast<int>(c.size()) > side_cap) break;
      Word side_bc = sys.reduce(concat(binv, c));
      if (static_cast<int>(side_bc.size()) > side_cap) continue;

      // Vertex lists per side, excluding each side's starting corner:
      //   identity->B: prefixes of b, lengths 1..|b|
      //   B->C:        stepped below (ends at c)
      //   C->identity: prefixes of c, lengths 0..|c|-1
      side_bc_vertices.clear();
      Word v = b;
      for (int x : side_bc) {
        v.push_back(x);
        v = sys.reduce(std::move(v));
        side_bc_vertices.push_back(v);
      }
      assert(side_bc_vertices.back() == c);

      bool degenerate = false;
      // identity->B list against B->C list
      for (std::size_t i = 1; i <= b.size() && !degenerate; ++i) {
        Word pref(b.begin(), b.begin() + i);
        for (const Word& u : side_bc_vertices) {
          if (u == pref) {
            degenerate = true;
            break;
          }
        }
      }
      // B->C list against C->identity list (proper prefixes of c, and the
      // identity itself which is the length-0 prefix)
      for (const Word& u : side_bc_vertices) {
        if (degenerate) break;
        if (u.size() < c.size() && std::equal(u.begin(), u.end(), c.begin()))
          degenerate = true;
      }
      // C->identity list against identity->B list: any shared prefix word
      if (!degenerate && common_prefix_length(b, c) >= 1 && c.size() >= 2)
        degenerate = true;

      if (degenerate) continue;

      GeodesicTriangle tri{b, c, b, side_bc, sys.inverse_word(c)};
      if (!fn(std::move(tri))) return;
    }
  }
}

}  // namespace

std::vector<GeodesicTriangle> enumerate_triangles(const RewritingSystem& sys,
                                                  int radius, int side_cap,
                                                  std::size_t max_elements) {
  Ball ball = build_ball(sys, radius, max_elements);
  std::vector<GeodesicTriangle> out;
  scan_triangles(sys, ball, side_cap, [&](GeodesicTriangle tri) {
    out.push_back(std::move(tri));
    return true;
  });
  return out;
}

NdtReport check_ndt_bound(const RewritingSystem& sys, int radius, int k,
                          std::size_t max_elements) {
  Ball ball = build_ball(sys, radius, max_elements);
  NdtReport rep;
  rep.k = k;
  scan_triangles(sys, ball, 2 * radius, [&](GeodesicTriangle tri) {
    ++rep.triangles_found;
    rep.max_side_found = std::max(rep.max_side_found, tri.max_side());
    if (tri.max_side() > k && !rep.witness) {
      rep.holds = false;
      rep.witness = std::move(tri);
    }
    return true;
  });
  return rep;
}

BroomlikeReport check_broomlike(const RewritingSystem& sys, int radius, int s,
                                std::size_t max_elements) {
  Ball ball = build_ball(sys, radius, max_elements);
  BroomlikeReport rep;
  rep.s = s;
  const int nletters = static_cast<int>(sys.alphabet().size());
  for (std::size_t i = 1; i < ball.size(); ++i) {
    const Word& u = ball.elements[i];
    if (static_cast<int>(u.size()) > radius - 1) break;
    for (int x = 0; x < nletters; ++x) {
      Word ux = u;
      ux.push_back(x);
      Word w = sys.reduce(std::move(ux));
      if (w.size() != u.size()) continue;  // geodesic or backtracking step
      ++rep.cases_checked;
      std::size_t lcp = common_prefix_length(u, w);
      if (static_cast<int>(u.size() - lcp) > s) {
        rep.holds = false;
        rep.witness_u = u;
        rep.witness_letter = x;
        rep.witness_w = std::move(w);
        return rep;
      }
    }
  }
  return rep;
}

RewritingSystem synthesize_rules(const RewritingSystem& sys, int radius,
                                 int k, std::size_t max_elements) {
  if (radius < k + 2)
    throw std::invalid_argument(
        "synthesis radius must be at least k+2 so every candidate triangle "
        "is visible");
  GeodeticReport geo = check_geodetic(sys, radius, max_elements);
  if (!geo.geodetic)
    throw std::invalid_argument(
        "ball is not geodetic; cannot synthesize rules");
  NdtReport ndt = check_ndt_bound(sys, radius, k, max_elements);
  if (!ndt.holds)
    throw std::invalid_argument(
        "non-degenerate triangle with side " +
        std::to_string(ndt.max_side_found) + " exceeds k=" +
        std::to_string(k) + " inside the ball");

  const int nletters = static_cast<int>(sys.alphabet().size());
  std::vector<Rule> rules;
  for (int a = 0; a < nletters; ++a) {
    for (int b = 0; b < nletters; ++b) {
      if (sys.reduce(Word{a, b}).empty()) rules.push_back({{a, b}, {}});
    }
  }

  Ball ball = build_ball(sys, radius, max_elements);
  scan_triangles(sys, ball, 2 * radius, [&](GeodesicTriangle tri) {
    if (tri.side_bc.size() == 1) {
      // (u x, v): u the geodesic to corner B, x the single-letter side,
      // v the normal form of corner C
      Word lhs = tri.corner_b;
      lhs.push_back(tri.side_bc[0]);
      rules.push_back({std::move(lhs), tri.corner_c});
    }
    return true;
  });

  RewritingSystem synth(sys.alphabet(), std::move(rules));
  return normalized_view(synth);
}

}  // namespace lrg
