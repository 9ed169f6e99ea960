#include "lrg/torsion.hpp"

#include <cassert>
#include <stdexcept>

namespace lrg {

long long order_bound(const RewritingSystem& sys, std::size_t max_elements) {
  return static_cast<long long>(
      build_ball(sys, sys.rt() + 2, max_elements).size());
}

OrderResult element_order(const RewritingSystem& sys, const Word& w,
                          std::optional<long long> bound,
                          std::size_t max_elements) {
  long long limit = bound ? *bound : order_bound(sys, max_elements);
  OrderResult res;
  res.bound_used = limit;

  Word base = sys.reduce(w);
  if (base.empty()) {
    res.finite = true;
    res.order = 1;
    res.steps = 1;
    return res;
  }

  std::unordered_map<Word, long long, WordHash> seen;
  Word power = base;
  for (long long n = 1; n <= limit; ++n) {
    res.steps = n;
    res.last_length = static_cast<long long>(power.size());
    if (power.empty()) {
      res.finite = true;
      res.order = n;
      return res;
    }
    auto [it, fresh] = seen.emplace(power, n);
    if (!fresh) {
      // A cycle that skips the identity is impossible for group elements;
      // treat it as the order all the same and let callers assert.
      assert(false && "power sequence cycled without reaching the identity");
      res.finite = true;
      res.order = n - it->second;
      return res;
    }
    power = sys.reduce(concat(power, base));
  }
  res.last_length = static_cast<long long>(power.size());
  res.finite = false;
  return res;
}

bool related(const RewritingSystem& sys, const Word& a, const Word& b,
             std::optional<long long> bound) {
  Word na = sys.reduce(a);
  Word nb = sys.reduce(b);
  if (na.empty() || nb.empty())
    throw std::invalid_argument(
        "the relation is defined on nontrivial elements only");
  if (!element_order(sys, na, bound).finite ||
      !element_order(sys, nb, bound).finite)
    throw std::invalid_argument(
        "the relation is defined on finite-order elements only");
  return element_order(sys, sys.reduce(concat(na, nb)), bound).finite;
}

OrderOracle::OrderOracle(const RewritingSystem& sys,
                         std::optional<long long> bound)
    : sys_(&sys), bound_(bound) {}

OrderOracle::OrderOracle(const RewritingSystem& sys, Backend backend)
    : sys_(&sys), backend_(std::move(backend)) {}

bool OrderOracle::finite(const Word& w) const {
  Word nf = sys_->reduce(w);
  auto it = cache_.find(nf);
  if (it != cache_.end()) return it->second;
  ++backend_calls_;
  if (!backend_ && !bound_) bound_ = order_bound(*sys_);  // computed once
  bool result = backend_ ? backend_(nf)
                         : element_order(*sys_, nf, bound_).finite;
  cache_.emplace(std::move(nf), result);
  return result;
}

}  // namespace lrg
