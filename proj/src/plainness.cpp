#include "lrg/plainness.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrg {

bool verify_witness(const RewritingSystem& sys, const Word& u, const Word& v,
                    const Word& w, const OrderOracle& oracle) {
  long long cap = 11LL * sys.lt();
  for (const Word* p : {&u, &v, &w}) {
    if (p->empty())
      throw std::invalid_argument("witness words must be nonempty");
    if (static_cast<long long>(p->size()) > cap)
      throw std::invalid_argument("witness word exceeds the 11 * lt bound");
  }
  return oracle.finite(u) && oracle.finite(v) && oracle.finite(w) &&
         oracle.finite(sys.reduce(concat(u, v))) &&
         oracle.finite(sys.reduce(concat(v, w))) &&
         !oracle.finite(sys.reduce(concat(u, w)));
}

std::vector<Word> finite_order_elements(const RewritingSystem& sys,
                                        int radius, const OrderOracle& oracle,
                                        std::size_t max_elements) {
  Ball ball = build_ball(sys, radius, max_elements);
  std::vector<Word> out;
  for (std::size_t i = 1; i < ball.size(); ++i) {
    if (oracle.finite(ball.elements[i])) out.push_back(ball.elements[i]);
  }
  return out;
}

PlainnessVerdict search_witness(const RewritingSystem& sys, int radius,
                                const OrderOracle& oracle,
                                std::size_t max_elements) {
  int full = 11 * sys.lt();
  int r = std::min(radius, full);
  Ball ball = build_ball(sys, r, max_elements);

  PlainnessVerdict verdict;
  verdict.radius_searched = r;
  verdict.complete = (r >= full) || ball.saturated;

  std::vector<Word> fo;
  for (std::size_t i = 1; i < ball.size(); ++i) {
    if (oracle.finite(ball.elements[i])) fo.push_back(ball.elements[i]);
  }
  verdict.finite_order_count = static_cast<long long>(fo.size());

  for (const Word& u : fo) {
    for (const Word& v : fo) {
      if (!oracle.finite(sys.reduce(concat(u, v)))) continue;
      for (const Word& w : fo) {
        if (!oracle.finite(sys.reduce(concat(v, w)))) continue;
        if (!oracle.finite(sys.reduce(concat(u, w)))) {
          verdict.plain = false;
          verdict.witness = NonTransitiveTriple{u, v, w};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

TransitivityReport transitivity_scan(const RewritingSystem& sys, int radius,
                                     const OrderOracle& oracle,
                                     std::size_t max_elements) {
  int r = std::min(radius, 11 * sys.lt());
  TransitivityReport rep;
  rep.radius = r;
  std::vector<Word> fo = finite_order_elements(sys, r, oracle, max_elements);
  rep.finite_order_count = static_cast<long long>(fo.size());

  auto rel = [&](const Word& a, const Word& b) {
    return oracle.finite(sys.reduce(concat(a, b)));
  };
  for (const Word& a : fo) {
    for (const Word& b : fo) {
      if (!rel(a, b)) continue;
      ++rep.pairs_related;
      for (const Word& c : fo) {
        if (rel(b, c) && !rel(a, c))
          rep.violations.push_back({a, b, c});
      }
    }
  }
  return rep;
}

}  // namespace lrg
