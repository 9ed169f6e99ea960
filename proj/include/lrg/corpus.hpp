#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrg/rewriting.hpp"

namespace lrg {

struct ExpectedDecomposition {
  int k = 0;
  std::vector<long long> orders;  // sorted ascending
  int q = 0;
};

/// One bundled input with its ground-truth annotations.
struct CorpusEntry {
  std::string path;  // absolute, resolved against the manifest directory
  std::string label;
  std::string iso_class;
  bool confluent = true;
  bool inverse_closed = true;
  int lt = 0;
  int rt = 0;
  long long nt = 0;
  std::vector<long long> ball_sizes;  // |B(r)| from r = 0
  std::optional<ExpectedDecomposition> decomposition;

  RewritingSystem load() const;
};

/// Parses the manifest and verifies every referenced file exists and parses.
/// Throws std::runtime_error on any manifest/entry mismatch.
std::vector<CorpusEntry> load_corpus(const std::string& manifest_path);

/// Rewriting system of a finite group given as a multiplication table over
/// indices 0..n-1 with identity 0: one letter per non-identity element,
/// rules xy -> (product) or xy -> empty when the product is the identity.
RewritingSystem table_system(const std::vector<std::vector<int>>& mult,
                             const std::vector<std::string>& names);

}  // namespace lrg
