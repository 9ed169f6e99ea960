#include "lrg/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lrg {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

RewritingSystem CorpusEntry::load() const {
  return RewritingSystem::parse(slurp(path));
}

std::vector<CorpusEntry> load_corpus(const std::string& manifest_path) {
  nlohmann::json doc = nlohmann::json::parse(slurp(manifest_path));
  std::filesystem::path base =
      std::filesystem::path(manifest_path).parent_path();

  std::vector<CorpusEntry> out;
  for (const auto& e : doc.at("entries")) {
    CorpusEntry entry;
    entry.path = (base / e.at("path").get<std::string>()).string();
    entry.label = e.at("label").get<std::string>();
    entry.iso_class = e.value("iso_class", std::string{});
    entry.confluent = e.at("confluent").get<bool>();
    entry.inverse_closed = e.at("inverse_closed").get<bool>();
    entry.lt = e.at("lT").get<int>();
    entry.rt = e.at("rT").get<int>();
    entry.nt = e.at("nT").get<long long>();
    if (e.contains("ball_sizes"))
      entry.ball_sizes = e.at("ball_sizes").get<std::vector<long long>>();
    if (e.contains("decomposition")) {
      ExpectedDecomposition d;
      d.k = e.at("decomposition").at("k").get<int>();
      d.orders =
          e.at("decomposition").at("orders").get<std::vector<long long>>();
      d.q = e.at("decomposition").at("q").get<int>();
      std::sort(d.orders.begin(), d.orders.end());
      entry.decomposition = std::move(d);
    }
    if (!std::filesystem::exists(entry.path))
      throw std::runtime_error("manifest references missing file '" +
                               entry.path + "'");
    RewritingSystem sys = entry.load();  // must at least parse
    if (sys.lt() != entry.lt || sys.rt() != entry.rt || sys.nt() != entry.nt)
      throw std::runtime_error("manifest metrics disagree with '" +
                               entry.path + "'");
    out.push_back(std::move(entry));
  }
  return out;
}

RewritingSystem table_system(const std::vector<std::vector<int>>& mult,
                             const std::vector<std::string>& names) {
  const int n = static_cast<int>(mult.size());
  if (static_cast<int>(names.size()) != n - 1)
    throw std::invalid_argument("need one name per non-identity element");
  std::vector<Letter> letters;
  for (int i = 0; i < n - 1; ++i) letters.push_back({i, names[i]});

  std::vector<Rule> rules;
  for (int g = 1; g < n; ++g) {
    for (int h = 1; h < n; ++h) {
      int p = mult[g][h];
      Word lhs{g - 1, h - 1};
      Word rhs;
      if (p != 0) rhs.push_back(p - 1);
      rules.push_back({std::move(lhs), std::move(rhs)});
    }
  }
  return RewritingSystem(std::move(letters), std::move(rules));
}

}  // namespace lrg
