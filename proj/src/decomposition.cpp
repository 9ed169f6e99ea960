#include "lrg/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace lrg {

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const int n = std::min(m.rows, m.cols);
  int s = 0;
  while (s < n) {
    // pivot: smallest nonzero absolute value in the lower-right submatrix
    int pi = -1, pj = -1;
    for (int i = s; i < m.rows; ++i) {
      for (int j = s; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || big_abs(m.at(i, j)) < big_abs(m.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;  // all zero: done
    if (pi != s)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(s, j));
    if (pj != s)
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, s));

    bool clean = true;
    for (int i = s + 1; i < m.rows; ++i) {
      if (m.at(i, s) == 0) continue;
      BigInt q = m.at(i, s) / m.at(s, s);
      for (int j = s; j < m.cols; ++j) m.at(i, j) -= q * m.at(s, j);
      if (m.at(i, s) != 0) clean = false;
    }
    for (int j = s + 1; j < m.cols; ++j) {
      if (m.at(s, j) == 0) continue;
      BigInt q = m.at(s, j) / m.at(s, s);
      for (int i = s; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, s);
      if (m.at(s, j) != 0) clean = false;
    }
    if (!clean) continue;  // remainders left: pick a smaller pivot and redo

    // pivot must divide the rest of the submatrix for the divisibility chain
    bool divides = true;
    for (int i = s + 1; i < m.rows && divides; ++i) {
      for (int j = s + 1; j < m.cols && divides; ++j) {
        if (m.at(i, j) % m.at(s, s) != 0) {
          for (int jj = 0; jj < m.cols; ++jj) m.at(s, jj) += m.at(i, jj);
          divides = false;
        }
      }
    }
    if (!divides) continue;

    if (m.at(s, s) < 0)
      for (int j = 0; j < m.cols; ++j) m.at(s, j) = -m.at(s, j);
    ++s;
  }

  std::vector<BigInt> diag;
  diag.reserve(n);
  for (int i = 0; i < n; ++i) diag.push_back(i < s ? m.at(i, i) : BigInt(0));
  return diag;
}

std::vector<Word> maximal_subgroup_representatives(const RewritingSystem& sys,
                                                   const OrderOracle& oracle,
                                                   const DecomposeOptions& opts,
                                                   bool* truncated) {
  const int inner_radius = sys.rt() + 2;
  const int full_radius = 11 * sys.lt();
  const int scan_radius =
      std::max(inner_radius, opts.scan_radius.value_or(full_radius));

  Ball inner = build_ball(sys, inner_radius, opts.max_elements);
  Ball outer = build_ball(sys, scan_radius, opts.max_elements);
  if (truncated)
    *truncated = scan_radius < full_radius && !outer.saturated;

  // finite-order elements strictly outside the inner ball
  std::vector<const Word*> outside_finite;
  for (std::size_t i = outer.layer_offsets[inner_radius + 1];
       i < outer.size(); ++i) {
    if (oracle.finite(outer.elements[i]))
      outside_finite.push_back(&outer.elements[i]);
  }

  Ball conj = build_ball(sys, 5 * sys.rt() + 4, opts.max_elements);

  std::vector<Word> list;
  for (std::size_t i = 1; i < inner.size(); ++i) {
    const Word& u = inner.elements[i];
    if (!oracle.finite(u)) continue;

    // u's maximal finite subgroup must live wholly inside the inner ball:
    // any finite-order t outside it with tu finite shares u's subgroup
    bool rejected = false;
    for (const Word* t : outside_finite) {
      if (oracle.finite(sys.reduce(concat(*t, u)))) {
        rejected = true;
        break;
      }
    }
    if (rejected) continue;

    // conjugates of u next to a listed representative h mean u's class is
    // already represented
    if (!list.empty()) {
      for (std::size_t ti = 1; ti < conj.size() && !rejected; ++ti) {
        const Word& t = conj.elements[ti];
        Word tut = sys.reduce(concat(concat(t, u), sys.inverse_word(t)));
        for (const Word& h : list) {
          if (oracle.finite(sys.reduce(concat(tut, h)))) {
            rejected = true;
            break;
          }
        }
      }
    }
    if (!rejected) list.push_back(u);
  }
  return list;
}

std::vector<Word> recover_subgroup(const RewritingSystem& sys, const Word& v,
                                   const OrderOracle& oracle,
                                   std::size_t max_elements) {
  Ball inner = build_ball(sys, sys.rt() + 2, max_elements);
  std::vector<Word> out;
  out.push_back({});
  for (std::size_t i = 1; i < inner.size(); ++i) {
    const Word& u = inner.elements[i];
    if (oracle.finite(u) && oracle.finite(sys.reduce(concat(u, v))))
      out.push_back(u);
  }
  return out;
}

std::vector<Word> generating_set(const RewritingSystem& sys,
                                 const std::vector<Word>& elements) {
  std::unordered_set<Word, WordHash> member(elements.begin(), elements.end());
  if (!member.count(Word{}))
    throw std::invalid_argument("subgroup must contain the identity");

  std::unordered_set<Word, WordHash> generated;
  generated.insert(Word{});
  std::vector<Word> gens;

  auto close_over = [&](const Word& fresh) {
    // right-multiplication closure; in a finite group this reaches the whole
    // generated subgroup without needing explicit inverses
    std::vector<Word> queue(generated.begin(), generated.end());
    if (!generated.count(fresh)) {
      generated.insert(fresh);
      queue.push_back(fresh);
    }
    while (!queue.empty()) {
      Word g = std::move(queue.back());
      queue.pop_back();
      for (const Word& gen : gens) {
        Word p = sys.reduce(concat(g, gen));
        if (!member.count(p))
          throw std::invalid_argument(
              "element set is not closed under multiplication");
        if (generated.insert(p).second) queue.push_back(p);
      }
    }
  };

  for (const Word& e : elements) {
    if (e.empty() || generated.count(e)) continue;
    gens.push_back(e);
    close_over(e);
  }
  assert(generated.size() == member.size());
  return gens;
}

IntMatrix relation_matrix(const RewritingSystem& sys) {
  if (!sys.has_inverse_pairing())
    throw std::logic_error("relation matrix needs a total inverse pairing");
  const int nletters = static_cast<int>(sys.alphabet().size());
  std::vector<int> col(nletters, -1);
  int ncols = 0;
  for (int a = 0; a < nletters; ++a) {
    if (a <= sys.inverse_letter(a)) col[a] = ncols++;
  }

  IntMatrix m(static_cast<int>(sys.rules().size()), ncols);
  auto add = [&](Word const& w, int row, int sign) {
    for (int x : w) {
      if (col[x] >= 0)
        m.at(row, col[x]) += sign;
      else
        m.at(row, col[sys.inverse_letter(x)]) -= sign;
    }
  };
  for (int r = 0; r < static_cast<int>(sys.rules().size()); ++r) {
    add(sys.rules()[r].lhs, r, +1);
    add(sys.rules()[r].rhs, r, -1);
  }
  return m;
}

int abelianization_rank(const RewritingSystem& sys) {
  IntMatrix m = relation_matrix(sys);
  if (m.cols == 0) return 0;
  std::vector<BigInt> diag = smith_normal_form(std::move(m));
  int zeros = 0;
  for (const BigInt& d : diag)
    if (d == 0) ++zeros;
  return zeros;
}

namespace {

void verify_subgroup(const RewritingSystem& sys, const SubgroupRecord& rec) {
  std::unordered_set<Word, WordHash> member(rec.elements.begin(),
                                            rec.elements.end());
  for (const Word& g : rec.elements) {
    if (!member.count(sys.reduce(sys.inverse_word(g))))
      throw std::runtime_error(
          "recovered subgroup is not closed under inversion; the group is "
          "likely not plain");
    for (const Word& h : rec.elements) {
      if (!member.count(sys.reduce(concat(g, h))))
        throw std::runtime_error(
            "recovered subgroup is not closed under multiplication; the "
            "group is likely not plain");
    }
  }
}

}  // namespace

Decomposition decompose(const RewritingSystem& sys, const OrderOracle& oracle,
                        const DecomposeOptions& opts) {
  Decomposition dec;

  if (sys.rt() == 0) {
    // Every rule is (ab, empty): involution letters give Z2 factors and
    // non-involution inverse pairs give Z factors.
    for (const Letter& l : sys.alphabet()) {
      if (sys.inverse_letter(l.id) != l.id) continue;
      SubgroupRecord rec;
      rec.representative = {l.id};
      rec.elements = {Word{}, {l.id}};
      rec.order = 2;
      rec.generators = {{l.id}};
      dec.subgroups.push_back(std::move(rec));
    }
  } else {
    bool truncated = false;
    std::vector<Word> reps =
        maximal_subgroup_representatives(sys, oracle, opts, &truncated);
    dec.complete = !truncated;
    for (const Word& v : reps) {
      SubgroupRecord rec;
      rec.representative = v;
      rec.elements = recover_subgroup(sys, v, oracle, opts.max_elements);
      rec.order = static_cast<long long>(rec.elements.size());
      verify_subgroup(sys, rec);
      rec.generators = generating_set(sys, rec.elements);
      dec.subgroups.push_back(std::move(rec));
    }
  }

  dec.free_rank = abelianization_rank(sys);

  long long limit = sys.nt() * sys.nt();
  if (static_cast<long long>(dec.subgroups.size()) > limit)
    throw std::runtime_error(
        "more conjugacy classes than the theory allows; the group is likely "
        "not plain");
  for (const SubgroupRecord& rec : dec.subgroups) {
    if (static_cast<double>(rec.generators.size()) >
        std::log2(static_cast<double>(rec.order)) + 1e-9)
      throw std::runtime_error("generating set exceeds the log2 bound");
  }
  return dec;
}

}  // namespace lrg
