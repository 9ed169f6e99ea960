#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrg/errors.hpp"
#include "lrg/word.hpp"

namespace lrg {

/// A rewriting rule lhs -> rhs with |lhs| > |rhs| and lhs non-empty.
struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A word admitting two distinct single-step rewrites. `offset` is the
/// position of rule_b's left-hand side inside `source` (rule_a applies at
/// position 0).
struct CriticalPair {
  Word source;
  Word reduct_a;
  Word reduct_b;
  int rule_a = -1;
  int rule_b = -1;
  int offset = 0;
};

/// A finite length-reducing rewriting system over an ordered alphabet.
///
/// Construction computes the derived metrics (max lhs length, max rhs
/// length, total size |alphabet| + sum of |lhs rhs| over rules) and infers
/// the letter-inverse pairing from rules of the shape (ab, empty). Nothing
/// is asserted about confluence or normalization at construction; use
/// validate() for that.
class RewritingSystem {
 public:
  RewritingSystem(std::vector<Letter> alphabet, std::vector<Rule> rules);

  /// Parses the .lrs format: '#' comment lines, one "letters:" line, and
  /// "rule: l1 l2 ... -> r1 r2 ..." lines (rhs may be empty). Rejects
  /// undeclared letters, duplicate letter names, rules that are not
  /// length-reducing, and single-letter left-hand sides.
  static RewritingSystem parse(const std::string& text);

  const std::vector<Letter>& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int lt() const { return lt_; }
  int rt() const { return rt_; }
  long long nt() const { return nt_; }

  /// Inverse of a letter, or -1 if no rule (a b, empty) determines one.
  int inverse_letter(int id) const { return inv_[id]; }
  bool inverse_ambiguous(int id) const { return inv_ambiguous_[id] != 0; }
  /// True iff every letter has an unambiguous inverse and the pairing is an
  /// involution.
  bool has_inverse_pairing() const;

  int letter_id(const std::string& name) const;  // -1 if unknown

  /// Whitespace-separated letter tokens -> word. Throws std::invalid_argument
  /// on unknown tokens. The empty string is the empty word.
  Word parse_word(const std::string& tokens) const;
  std::string word_to_string(const Word& w) const;

  /// Serialize back to the .lrs format.
  std::string to_lrs() const;

  /// Rewrites to an irreducible word with the deterministic strategy:
  /// leftmost applicable position first, lowest rule index at that position.
  /// For convergent systems this is the unique normal form of w.
  Word reduce(Word w) const;

  /// True iff no factor of w is the left-hand side of any rule.
  bool is_irreducible(const Word& w) const;

  /// True iff appending letter x to the irreducible word w keeps it
  /// irreducible (only suffixes ending at x need checking).
  bool irreducible_extension(const Word& w, int x) const;

  /// Letterwise inverse of the reversed word. Requires the inverse pairing
  /// to be total (throws std::logic_error otherwise).
  Word inverse_word(const Word& w) const;

 private:
  void index_rules();

  std::vector<Letter> alphabet_;
  std::vector<Rule> rules_;
  std::vector<int> inv_;
  std::vector<char> inv_ambiguous_;
  int lt_ = 0;
  int rt_ = 0;
  long long nt_ = 0;
  std::vector<std::vector<int>> rules_by_first_;  // rule indices by lhs front
  std::vector<std::vector<int>> rules_by_last_;   // rule indices by lhs back
};

/// All overlap/containment superpositions of pairs of left-hand sides,
/// including a rule with itself, in deterministic (rule_a, rule_b, offset)
/// order.
std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys);

struct ConfluenceResult {
  bool confluent = true;
  std::optional<CriticalPair> witness;  // first failing pair
  Word witness_nf_a;                    // its two irreducible descendants
  Word witness_nf_b;
};

/// Decides confluence of a (terminating) length-reducing system by reducing
/// both reducts of every critical pair with the deterministic strategy.
ConfluenceResult check_confluence(const RewritingSystem& sys);

/// Independent findings about a parsed system. Failures carry witnesses;
/// nothing here throws.
struct ValidationReport {
  bool length_reducing = true;
  std::optional<Rule> length_reducing_witness;

  bool letters_irreducible = true;
  std::optional<Letter> reducible_letter;

  bool normalized = true;
  std::optional<Rule> normalized_witness;
  std::string normalized_reason;

  bool inverse_closed = true;
  std::string inverse_witness;  // letter name + what is missing/ambiguous

  bool confluent = true;
  std::optional<CriticalPair> confluence_witness;
  Word confluence_nf_a;
  Word confluence_nf_b;

  bool ok() const {
    return length_reducing && letters_irreducible && normalized &&
           inverse_closed && confluent;
  }
};

/// Runs all findings. Inverse-closure is evaluated on the normalized view of
/// the system (restriction to irreducible letters and normalized rules), so
/// that redundant rules cannot mask or fake a pairing.
ValidationReport validate(const RewritingSystem& sys);

/// Restriction to irreducible letters and to rules whose proper lhs factors
/// and rhs are irreducible, first rule kept per lhs. Purely syntactic; it
/// presents the same group only when the input is convergent.
RewritingSystem normalized_view(const RewritingSystem& sys);

/// normalized_view plus a convergence precondition check (throws
/// std::invalid_argument when the input is not confluent).
RewritingSystem normalize(const RewritingSystem& sys);

}  // namespace lrg
