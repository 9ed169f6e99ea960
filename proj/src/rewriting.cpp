#include "lrg/rewriting.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lrg {

int shortlex_cmp(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  }
  return 0;
}

bool shortlex_less(const Word& u, const Word& v) {
  return shortlex_cmp(u, v) < 0;
}

std::size_t common_prefix_length(const Word& u, const Word& v) {
  std::size_t n = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < n && u[i] == v[i]) ++i;
  return i;
}

Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

RewritingSystem::RewritingSystem(std::vector<Letter> alphabet,
                                 std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  const int n = static_cast<int>(alphabet_.size());
  for (int i = 0; i < n; ++i) {
    if (alphabet_[i].id != i)
      throw std::invalid_argument("alphabet ids must be dense 0..n-1");
  }
  nt_ = n;
  for (const Rule& r : rules_) {
    if (r.lhs.empty()) throw std::invalid_argument("rule with empty lhs");
    for (int x : concat(r.lhs, r.rhs)) {
      if (x < 0 || x >= n)
        throw std::invalid_argument("rule references letter outside alphabet");
    }
    lt_ = std::max<int>(lt_, static_cast<int>(r.lhs.size()));
    rt_ = std::max<int>(rt_, static_cast<int>(r.rhs.size()));
    nt_ += static_cast<long long>(r.lhs.size() + r.rhs.size());
  }

  inv_.assign(n, -1);
  inv_ambiguous_.assign(n, 0);
  for (const Rule& r : rules_) {
    if (r.lhs.size() == 2 && r.rhs.empty()) {
      int a = r.lhs[0], b = r.lhs[1];
      if (inv_[a] == -1) {
        inv_[a] = b;
      } else if (inv_[a] != b) {
        inv_ambiguous_[a] = 1;
      }
    }
  }
  index_rules();
}

void RewritingSystem::index_rules() {
  rules_by_first_.assign(alphabet_.size(), {});
  rules_by_last_.assign(alphabet_.size(), {});
  for (int i = 0; i < static_cast<int>(rules_.size()); ++i) {
    rules_by_first_[rules_[i].lhs.front()].push_back(i);
    rules_by_last_[rules_[i].lhs.back()].push_back(i);
  }
}

bool RewritingSystem::has_inverse_pairing() const {
  for (std::size_t a = 0; a < alphabet_.size(); ++a) {
    if (inv_[a] < 0 || inv_ambiguous_[a]) return false;
    if (inv_[inv_[a]] != static_cast<int>(a)) return false;
  }
  return true;
}

int RewritingSystem::letter_id(const std::string& name) const {
  for (const Letter& l : alphabet_) {
    if (l.name == name) return l.id;
  }
  return -1;
}

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace

RewritingSystem RewritingSystem::parse(const std::string& text) {
  std::vector<Letter> alphabet;
  std::unordered_map<std::string, int> ids;
  bool letters_seen = false;
  std::vector<Rule> rules;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0].text[0] == '#') continue;

    if (toks[0].text == "letters:") {
      if (letters_seen)
        throw parse_error(lineno, toks[0].column,
                          "duplicate letters: line");
      letters_seen = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& name = toks[i].text;
        if (name == "->" || name[0] == '#')
          throw parse_error(lineno, toks[i].column,
                            "invalid letter name '" + name + "'");
        if (ids.count(name))
          throw parse_error(lineno, toks[i].column,
                            "duplicate letter name '" + name + "'");
        int id = static_cast<int>(alphabet.size());
        ids.emplace(name, id);
        alphabet.push_back({id, name});
      }
      if (alphabet.empty())
        throw parse_error(lineno, toks[0].column, "empty alphabet");
      continue;
    }

    if (toks[0].text == "rule:") {
      Word lhs, rhs;
      bool arrow = false;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].text == "->") {
          if (arrow)
            throw parse_error(lineno, toks[i].column, "duplicate '->'");
          arrow = true;
          continue;
        }
        auto it = ids.find(toks[i].text);
        if (it == ids.end())
          throw parse_error(lineno, toks[i].column,
                            "undeclared letter '" + toks[i].text + "'");
        (arrow ? rhs : lhs).push_back(it->second);
      }
      if (!arrow)
        throw parse_error(lineno, toks[0].column, "rule without '->'");
      if (lhs.empty())
        throw parse_error(lineno, toks[0].column, "rule with empty lhs");
      if (lhs.size() == 1)
        throw parse_error(lineno, toks[0].column,
                          "single-letter lhs is not allowed (letters must "
                          "stay irreducible)");
      if (lhs.size() <= rhs.size())
        throw parse_error(lineno, toks[0].column,
                          "rule is not length-reducing");
      rules.push_back({std::move(lhs), std::move(rhs)});
      continue;
    }

    throw parse_error(lineno, toks[0].column,
                      "unrecognized line (expected '#', 'letters:' or "
                      "'rule:')");
  }
  if (!letters_seen) throw parse_error(lineno + 1, 1, "missing letters: line");
  return RewritingSystem(std::move(alphabet), std::move(rules));
}

Word RewritingSystem::parse_word(const std::string& tokens) const {
  Word w;
  for (const Token& t : tokenize(tokens)) {
    int id = letter_id(t.text);
    if (id < 0)
      throw std::invalid_argument("unknown letter '" + t.text + "'");
    w.push_back(id);
  }
  return w;
}

std::string RewritingSystem::word_to_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_[w[i]].name;
  }
  return out;
}

std::string RewritingSystem::to_lrs() const {
  std::string out = "letters:";
  for (const Letter& l : alphabet_) out += " " + l.name;
  out += "\n";
  for (const Rule& r : rules_) {
    out += "rule: " + word_to_string(r.lhs) + " ->";
    if (!r.rhs.empty()) out += " " + word_to_string(r.rhs);
    out += "\n";
  }
  return out;
}

Word RewritingSystem::reduce(Word w) const {
  if (rules_.empty()) return w;
  std::size_t pos = 0;
  while (pos < w.size()) {
    int applied = -1;
    for (int ri : rules_by_first_[w[pos]]) {
      const Word& l = rules_[ri].lhs;
      if (pos + l.size() > w.size()) continue;
      if (std::equal(l.begin() + 1, l.end(), w.begin() + pos + 1)) {
        applied = ri;
        break;
      }
    }
    if (applied < 0) {
      ++pos;
      continue;
    }
    const Rule& r = rules_[applied];
    w.erase(w.begin() + pos, w.begin() + pos + r.lhs.size());
    w.insert(w.begin() + pos, r.rhs.begin(), r.rhs.end());
    // A new redex can start at most lt-1 positions to the left.
    std::size_t back = static_cast<std::size_t>(lt_ - 1);
    pos = pos > back ? pos - back : 0;
  }
  return w;
}

bool RewritingSystem::is_irreducible(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (int ri : rules_by_first_[w[pos]]) {
      const Word& l = rules_[ri].lhs;
      if (pos + l.size() > w.size()) continue;
      if (std::equal(l.begin() + 1, l.end(), w.begin() + pos + 1)) return false;
    }
  }
  return true;
}

bool RewritingSystem::irreducible_extension(const Word& w, int x) const {
  for (int ri : rules_by_last_[x]) {
    const Word& l = rules_[ri].lhs;
    if (l.size() > w.size() + 1) continue;
    if (std::equal(l.begin(), l.end() - 1, w.end() - (l.size() - 1)))
      return false;
  }
  return true;
}

Word RewritingSystem::inverse_word(const Word& w) const {
  if (!has_inverse_pairing())
    throw std::logic_error("system has no total inverse pairing");
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv_[*it]);
  return out;
}

std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys) {
  const auto& rules = sys.rules();
  std::vector<CriticalPair> out;
  for (int i = 0; i < static_cast<int>(rules.size()); ++i) {
    const Word& li = rules[i].lhs;
    for (int j = 0; j < static_cast<int>(rules.size()); ++j) {
      const Word& lj = rules[j].lhs;
      for (int off = 0; off < static_cast<int>(li.size()); ++off) {
        if (i == j && off == 0) continue;  // the trivial self-superposition
        std::size_t end_j = off + lj.size();
        std::size_t olap_end = std::min(li.size(), end_j);
        bool match = true;
        for (std::size_t p = off; p < olap_end; ++p) {
          if (li[p] != lj[p - off]) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        Word source = li;
        if (end_j > li.size())
          source.insert(source.end(), lj.begin() + (li.size() - off),
                        lj.end());
        // rule i at position 0
        Word a = rules[i].rhs;
        a.insert(a.end(), source.begin() + li.size(), source.end());
        // rule j at position off
        Word b(source.begin(), source.begin() + off);
        b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
        b.insert(b.end(), source.begin() + end_j, source.end());
        out.push_back({std::move(source), std::move(a), std::move(b), i, j,
                       off});
      }
    }
  }
  return out;
}

ConfluenceResult check_confluence(const RewritingSystem& sys) {
  for (CriticalPair& cp : critical_pairs(sys)) {
    Word na = sys.reduce(cp.reduct_a);
    Word nb = sys.reduce(cp.reduct_b);
    if (na != nb) {
      ConfluenceResult res;
      res.confluent = false;
      res.witness = std::move(cp);
      res.witness_nf_a = std::move(na);
      res.witness_nf_b = std::move(nb);
      return res;
    }
  }
  return {};
}

RewritingSystem normalized_view(const RewritingSystem& sys) {
  const auto& rules = sys.rules();

  // A letter is reducible iff some lhs is that single letter.
  std::vector<char> reducible(sys.alphabet().size(), 0);
  for (const Rule& r : rules) {
    if (r.lhs.size() == 1) reducible[r.lhs[0]] = 1;
  }
  std::vector<Letter> letters;
  std::vector<int> remap(sys.alphabet().size(), -1);
  for (const Letter& l : sys.alphabet()) {
    if (reducible[l.id]) continue;
    remap[l.id] = static_cast<int>(letters.size());
    letters.push_back({static_cast<int>(letters.size()), l.name});
  }

  auto over_kept = [&](const Word& w) {
    for (int x : w)
      if (remap[x] < 0) return false;
    return true;
  };
  auto proper_factors_irreducible = [&](const Word& lhs) {
    // every factor other than lhs itself
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      for (std::size_t len = 1; i + len <= lhs.size(); ++len) {
        if (i == 0 && len == lhs.size()) continue;
        Word f(lhs.begin() + i, lhs.begin() + i + len);
        if (!sys.is_irreducible(f)) return false;
      }
    }
    return true;
  };

  std::set<Word> seen_lhs;
  std::vector<Rule> kept;
  for (const Rule& r : rules) {
    if (!over_kept(r.lhs) || !over_kept(r.rhs)) continue;
    if (!sys.is_irreducible(r.rhs)) continue;
    if (!proper_factors_irreducible(r.lhs)) continue;
    if (!seen_lhs.insert(r.lhs).second) continue;  // first rule per lhs wins
    Word lhs, rhs;
    for (int x : r.lhs) lhs.push_back(remap[x]);
    for (int x : r.rhs) rhs.push_back(remap[x]);
    kept.push_back({std::move(lhs), std::move(rhs)});
  }
  return RewritingSystem(std::move(letters), std::move(kept));
}

RewritingSystem normalize(const RewritingSystem& sys) {
  ConfluenceResult c = check_confluence(sys);
  if (!c.confluent)
    throw std::invalid_argument(
        "cannot normalize a non-convergent system (critical pair at '" +
        sys.word_to_string(c.witness->source) + "' fails to join)");
  return normalized_view(sys);
}

ValidationReport validate(const RewritingSystem& sys) {
  ValidationReport rep;

  for (const Rule& r : sys.rules()) {
    if (r.lhs.size() <= r.rhs.size()) {
      rep.length_reducing = false;
      rep.length_reducing_witness = r;
      break;
    }
  }

  for (const Letter& l : sys.alphabet()) {
    if (!sys.is_irreducible(Word{l.id})) {
      rep.letters_irreducible = false;
      rep.reducible_letter = l;
      break;
    }
  }

  std::set<Word> seen_lhs;
  for (const Rule& r : sys.rules()) {
    if (!seen_lhs.insert(r.lhs).second) {
      rep.normalized = false;
      rep.normalized_witness = r;
      rep.normalized_reason = "duplicate left-hand side";
      break;
    }
    if (!sys.is_irreducible(r.rhs)) {
      rep.normalized = false;
      rep.normalized_witness = r;
      rep.normalized_reason = "reducible right-hand side";
      break;
    }
    bool bad = false;
    for (std::size_t i = 0; i < r.lhs.size() && !bad; ++i) {
      for (std::size_t len = 1; i + len <= r.lhs.size() && !bad; ++len) {
        if (i == 0 && len == r.lhs.size()) continue;
        Word f(r.lhs.begin() + i, r.lhs.begin() + i + len);
        if (!sys.is_irreducible(f)) bad = true;
      }
    }
    if (bad) {
      rep.normalized = false;
      rep.normalized_witness = r;
      rep.normalized_reason = "reducible proper factor of left-hand side";
      break;
    }
  }

  // Inverse closure is decided on the normalized view, so that redundant or
  // malformed rules cannot hide the pairing.
  RewritingSystem view = normalized_view(sys);
  for (const Letter& l : view.alphabet()) {
    int b = view.inverse_letter(l.id);
    if (view.inverse_ambiguous(l.id)) {
      rep.inverse_closed = false;
      rep.inverse_witness =
          "letter '" + l.name + "' has two distinct candidate inverses";
      break;
    }
    if (b < 0) {
      rep.inverse_closed = false;
      rep.inverse_witness = "letter '" + l.name + "' has no inverse rule";
      break;
    }
    if (view.inverse_letter(b) != l.id) {
      rep.inverse_closed = false;
      rep.inverse_witness = "inverse pairing of letter '" + l.name +
                            "' is not an involution";
      break;
    }
    if (!view.reduce(Word{l.id, b}).empty()) {
      rep.inverse_closed = false;
      rep.inverse_witness =
          "product of '" + l.name + "' and its inverse does not reduce to "
          "the empty word";
      break;
    }
  }

  ConfluenceResult c = check_confluence(sys);
  rep.confluent = c.confluent;
  if (!c.confluent) {
    rep.confluence_witness = c.witness;
    rep.confluence_nf_a = c.witness_nf_a;
    rep.confluence_nf_b = c.witness_nf_b;
  }
  return rep;
}

}  // namespace lrg
