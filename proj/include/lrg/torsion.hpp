#pragma once

#include <functional>
#include <optional>
#include <unordered_map>

#include "lrg/cayley.hpp"
#include "lrg/rewriting.hpp"

namespace lrg {

struct OrderResult {
  bool finite = false;
  long long order = 0;       // set when finite
  long long bound_used = 0;  // power-iteration bound that was in force
  long long steps = 0;       // powers actually computed
  long long last_length = 0; // |normal form of w^steps|
};

/// |B(rt+2)|: an upper bound on the order of any finite-order element, since
/// every finite subgroup is conjugate into B(rt+2) and element orders divide
/// the subgroup order.
long long order_bound(const RewritingSystem& sys,
                      std::size_t max_elements = kDefaultBallCap);

/// Power iteration: normal forms of w, w^2, ... up to `bound` (default
/// order_bound(sys)). Returns finite at the first power spelling the
/// identity; a repeated normal form short-circuits with the cycle length
/// (cannot happen for group elements before the identity appears, and is
/// asserted not to). Infinite after `bound` powers without the identity.
OrderResult element_order(const RewritingSystem& sys, const Word& w,
                          std::optional<long long> bound = {},
                          std::size_t max_elements = kDefaultBallCap);

/// a ~ b for nontrivial finite-order elements a, b: is the order of ab
/// finite? Throws std::invalid_argument when a or b is trivial or of
/// infinite order.
bool related(const RewritingSystem& sys, const Word& a, const Word& b,
             std::optional<long long> bound = {});

/// Finite-order queries with memoization by normal form. The default
/// backend is element_order; tests and negative-path experiments inject a
/// synthetic backend instead.
class OrderOracle {
 public:
  using Backend = std::function<bool(const Word& normal_form)>;

  explicit OrderOracle(const RewritingSystem& sys,
                       std::optional<long long> bound = {});
  OrderOracle(const RewritingSystem& sys, Backend backend);

  /// Does w spell a finite-order element? Reduces w first and caches.
  bool finite(const Word& w) const;

  const RewritingSystem& system() const { return *sys_; }
  long long backend_calls() const { return backend_calls_; }

 private:
  const RewritingSystem* sys_;
  Backend backend_;
  mutable std::optional<long long> bound_;
  mutable std::unordered_map<Word, bool, WordHash> cache_;
  mutable long long backend_calls_ = 0;
};

}  // namespace lrg
