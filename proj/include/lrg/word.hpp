#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lrg {

/// A letter of the alphabet. Ids are dense 0..|alphabet|-1 and follow the
/// declaration order of the source file, which is also the order used for
/// shortlex comparisons.
struct Letter {
  int id = 0;
  std::string name;
};

/// A word is a (possibly empty) sequence of letter ids. The empty word is
/// the identity.
using Word = std::vector<int>;

/// Length-first, then lexicographic by letter id. Returns <0, 0, >0.
int shortlex_cmp(const Word& u, const Word& v);

bool shortlex_less(const Word& u, const Word& v);

/// Length of the longest common prefix of u and v.
std::size_t common_prefix_length(const Word& u, const Word& v);

Word concat(const Word& u, const Word& v);

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace lrg
