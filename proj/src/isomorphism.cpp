#include "lrg/isomorphism.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "lrg/errors.hpp"

namespace lrg {

namespace {

constexpr int kAssociativityExhaustiveCap = 64;

std::vector<int> orders_from_table(const std::vector<std::vector<int>>& mult) {
  const int n = static_cast<int>(mult.size());
  std::vector<int> orders(n, 0);
  for (int i = 0; i < n; ++i) {
    int x = i, ord = 1;
    while (x != 0) {
      x = mult[x][i];
      ++ord;
      if (ord > n) throw std::invalid_argument("multiplication table is not a group");
    }
    orders[i] = ord;
  }
  return orders;
}

}  // namespace

FiniteGroupTable FiniteGroupTable::from_mult(
    std::vector<std::vector<int>> mult) {
  FiniteGroupTable t;
  t.n = static_cast<int>(mult.size());
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != t.n)
      throw std::invalid_argument("multiplication table is not square");
    for (int v : row) {
      if (v < 0 || v >= t.n)
        throw std::invalid_argument("table entry out of range");
    }
  }
  for (int i = 0; i < t.n; ++i) {
    if (mult[0][i] != i || mult[i][0] != i)
      throw std::invalid_argument("index 0 is not an identity");
  }
  t.inverse.assign(t.n, -1);
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j) {
      if (mult[i][j] == 0 && mult[j][i] == 0) {
        t.inverse[i] = j;
        break;
      }
    }
    if (t.inverse[i] < 0)
      throw std::invalid_argument("element without two-sided inverse");
  }
  if (t.n <= kAssociativityExhaustiveCap) {
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j)
        for (int k = 0; k < t.n; ++k)
          if (mult[mult[i][j]][k] != mult[i][mult[j][k]])
            throw std::invalid_argument("multiplication is not associative");
  }
  t.element_orders = orders_from_table(mult);
  t.mult = std::move(mult);
  return t;
}

FiniteGroupTable table_from_subgroup(const RewritingSystem& sys,
                                     const SubgroupRecord& rec) {
  const int n = static_cast<int>(rec.elements.size());
  std::unordered_map<Word, int, WordHash> index;
  for (int i = 0; i < n; ++i) index.emplace(rec.elements[i], i);
  if (rec.elements.empty() || !rec.elements[0].empty())
    throw std::invalid_argument("subgroup record must start at the identity");

  std::vector<std::vector<int>> mult(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Word p = sys.reduce(concat(rec.elements[i], rec.elements[j]));
      auto it = index.find(p);
      if (it == index.end())
        throw std::invalid_argument(
            "product escapes the subgroup; record is corrupted");
      mult[i][j] = it->second;
    }
  }
  return FiniteGroupTable::from_mult(std::move(mult));
}

namespace {

std::vector<int> table_generators(const FiniteGroupTable& t) {
  std::vector<char> generated(t.n, 0);
  generated[0] = 1;
  std::vector<int> gens;
  auto close_over = [&]() {
    std::vector<int> queue;
    for (int i = 0; i < t.n; ++i)
      if (generated[i]) queue.push_back(i);
    while (!queue.empty()) {
      int g = queue.back();
      queue.pop_back();
      for (int gen : gens) {
        int p = t.mult[g][gen];
        if (!generated[p]) {
          generated[p] = 1;
          queue.push_back(p);
        }
      }
    }
  };
  for (int i = 1; i < t.n; ++i) {
    if (generated[i]) continue;
    gens.push_back(i);
    close_over();
  }
  return gens;
}

struct IsoSearch {
  const FiniteGroupTable& a;
  const FiniteGroupTable& b;
  std::vector<int> gens;

  // Extends the partial map determined by the generator images assigned so
  // far; fails on any multiplicative inconsistency or injectivity clash.
  bool consistent(const std::vector<int>& gen_images, std::vector<int>& map,
                  std::vector<int>& pre) const {
    std::fill(map.begin(), map.end(), -1);
    std::fill(pre.begin(), pre.end(), -1);
    map[0] = 0;
    pre[0] = 0;
    std::vector<int> queue = {0};
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (std::size_t gi = 0; gi < gen_images.size(); ++gi) {
        int y = a.mult[x][gens[gi]];
        int iy = b.mult[map[x]][gen_images[gi]];
        if (map[y] == -1) {
          if (pre[iy] != -1) return false;
          map[y] = iy;
          pre[iy] = y;
          queue.push_back(y);
        } else if (map[y] != iy) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t gi, std::vector<int>& gen_images,
              std::vector<int>& map, std::vector<int>& pre) const {
    if (gi == gens.size()) return true;
    for (int img = 1; img < b.n; ++img) {
      if (b.element_orders[img] != a.element_orders[gens[gi]]) continue;
      gen_images.push_back(img);
      if (consistent(gen_images, map, pre) &&
          assign(gi + 1, gen_images, map, pre))
        return true;
      gen_images.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> finite_iso(const FiniteGroupTable& a,
                                           const FiniteGroupTable& b,
                                           int order_cap) {
  if (a.n > order_cap || b.n > order_cap)
    throw resource_limit_error("group order exceeds the isomorphism cap of " +
                               std::to_string(order_cap));
  if (a.n != b.n) return std::nullopt;
  std::vector<int> oa = a.element_orders, ob = b.element_orders;
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return std::nullopt;

  IsoSearch search{a, b, table_generators(a)};
  std::vector<int> gen_images;
  std::vector<int> map(a.n, -1), pre(b.n, -1);
  if (!search.assign(0, gen_images, map, pre)) return std::nullopt;

  // the final consistent closure covers all of A since gens generate it
  search.consistent(gen_images, map, pre);
  for (int v : map)
    if (v < 0) return std::nullopt;  // defensive; cannot happen
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (map[a.mult[i][j]] != b.mult[map[i]][map[j]]) return std::nullopt;
  return map;
}

namespace {

// Perfect matching between equal-order factor buckets, backtracking over
// candidate partners with memoized pairwise isomorphism results.
bool match_bucket(const std::vector<int>& ai, const std::vector<int>& bi,
                  std::size_t next, std::vector<char>& used,
                  std::vector<std::vector<int>>& memo,
                  const std::vector<FiniteGroupTable>& ta,
                  const std::vector<FiniteGroupTable>& tb, int order_cap,
                  std::vector<int>& matching) {
  if (next == ai.size()) return true;
  int i = ai[next];
  for (std::size_t jj = 0; jj < bi.size(); ++jj) {
    if (used[jj]) continue;
    int j = bi[jj];
    int& known = memo[i][j];
    if (known == -1)
      known = finite_iso(ta[i], tb[j], order_cap).has_value() ? 1 : 0;
    if (!known) continue;
    used[jj] = 1;
    matching[i] = j;
    if (match_bucket(ai, bi, next + 1, used, memo, ta, tb, order_cap,
                     matching))
      return true;
    used[jj] = 0;
    matching[i] = -1;
  }
  return false;
}

}  // namespace

IsoVerdict plain_iso(const RewritingSystem& sys_a,
                     const RewritingSystem& sys_b,
                     const DecomposeOptions& opts, int order_cap) {
  OrderOracle oracle_a(sys_a), oracle_b(sys_b);
  Decomposition da = decompose(sys_a, oracle_a, opts);
  Decomposition db = decompose(sys_b, oracle_b, opts);

  IsoVerdict v;
  v.q_a = da.free_rank;
  v.q_b = db.free_rank;
  v.complete = da.complete && db.complete;
  for (const auto& s : da.subgroups) v.orders_a.push_back(s.order);
  for (const auto& s : db.subgroups) v.orders_b.push_back(s.order);
  std::sort(v.orders_a.begin(), v.orders_a.end());
  std::sort(v.orders_b.begin(), v.orders_b.end());

  if (v.q_a != v.q_b) {
    v.certificate = {"q", "free ranks differ (" + std::to_string(v.q_a) +
                              " vs " + std::to_string(v.q_b) + ")"};
    return v;
  }
  if (da.k() != db.k()) {
    v.certificate = {"k", "finite factor counts differ (" +
                              std::to_string(da.k()) + " vs " +
                              std::to_string(db.k()) + ")"};
    return v;
  }
  if (v.orders_a != v.orders_b) {
    auto fmt = [](const std::vector<long long>& o) {
      std::string s = "{";
      for (std::size_t i = 0; i < o.size(); ++i)
        s += (i ? "," : "") + std::to_string(o[i]);
      return s + "}";
    };
    v.certificate = {"orders", "factor order multisets differ (" +
                                   fmt(v.orders_a) + " vs " +
                                   fmt(v.orders_b) + ")"};
    return v;
  }

  std::vector<FiniteGroupTable> ta, tb;
  for (const auto& s : da.subgroups)
    ta.push_back(table_from_subgroup(sys_a, s));
  for (const auto& s : db.subgroups)
    tb.push_back(table_from_subgroup(sys_b, s));

  const int k = da.k();
  std::vector<int> matching(k, -1);
  std::vector<std::vector<int>> memo(k, std::vector<int>(k, -1));

  // bucket factor indices by order
  std::vector<long long> orders;
  for (const auto& s : da.subgroups) orders.push_back(s.order);
  std::vector<long long> distinct = orders;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  bool ok = true;
  for (long long p : distinct) {
    std::vector<int> ai, bi;
    for (int i = 0; i < k; ++i)
      if (da.subgroups[i].order == p) ai.push_back(i);
    for (int j = 0; j < k; ++j)
      if (db.subgroups[j].order == p) bi.push_back(j);
    assert(ai.size() == bi.size());  // order multisets already matched
    std::vector<char> used(bi.size(), 0);
    if (!match_bucket(ai, bi, 0, used, memo, ta, tb, order_cap, matching)) {
      v.certificate = {"unmatched_factor",
                       "no isomorphic partner for a finite factor of order " +
                           std::to_string(p)};
      ok = false;
      break;
    }
  }
  if (!ok) return v;

  v.isomorphic = true;
  v.matching = matching;
  return v;
}

}  // namespace lrg
