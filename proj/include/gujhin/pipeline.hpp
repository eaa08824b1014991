#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gujhin/pos_lexicon.hpp"
#include "gujhin/script_map.hpp"
#include "gujhin/stemmer.hpp"

namespace gujhin {

enum class SuffixAction {
  EmitSeparateWord,  // stem, a space, then the target
  AttachToStem,      // target appended directly to the stem
};

struct TagSuffixRule {
  std::string suffix;
  TagPattern tag_pattern;
  SuffixAction action = SuffixAction::EmitSeparateWord;
  std::string target;
  std::string rule_id;
  std::size_t line = 0;
};

/// Tag-conditioned renderings of stripped suffixes.
class TagRuleTable {
 public:
  TagRuleTable() = default;
  /// Throws std::invalid_argument for an empty suffix or target and
  /// DuplicateRule for a repeated (suffix, tag pattern) key or rule id.
  explicit TagRuleTable(std::vector<TagSuffixRule> rules);

  /// Rule for a stripped `suffix` under `tag`. An exact tag match wins over
  /// `*`, which wins over an unconditional row.
  const TagSuffixRule* match(std::string_view suffix, std::optional<std::string_view> tag) const;
  const TagSuffixRule* find(std::string_view rule_id) const;

  const std::vector<TagSuffixRule>& rules() const noexcept { return rules_; }
  bool empty() const noexcept { return rules_.empty(); }
  std::size_t size() const noexcept { return rules_.size(); }

 private:
  std::vector<TagSuffixRule> rules_;
};

/// Parses `suffix<TAB>tag_pattern<TAB>SEP|ATTACH<TAB>target<TAB>rule_id`.
TagRuleTable load_tag_rules(std::string_view source);

enum class TokenPath { TagConditioned, NaiveFallback, Passthrough };

std::string_view to_string(TokenPath path);

struct TokenResult {
  std::string source;
  std::string output;
  std::optional<std::string> tag_used;
  std::optional<std::string> stem_rule_id;
  std::optional<std::string> tag_suffix_rule_id;
  TokenPath path = TokenPath::Passthrough;
};

/// Read-only resources shared by every call.
struct Resources {
  const TagLexicon& lexicon;
  const StemRuleSet& stem_rules;
  const TagRuleTable& tag_rules;
  const TransliterationTable& table;
};

/// Runs one whitespace-free NFC token through lookup, tagged stemming and
/// suffix rendering, falling back to naive transliteration.
TokenResult process_token(std::string_view token, const Resources& resources);

struct TextResult {
  std::vector<TokenResult> tokens;
  /// separators[i] is the text before tokens[i]; the last element is the
  /// text after the final token. Empty between tokens split off the same
  /// whitespace-delimited chunk.
  std::vector<std::string> separators;
  std::string output;

  /// Interleaves separators and token sources; equals the NFC input.
  std::string reconstruct_source() const;
};

/// Tokenizes NFC(`text`) on whitespace, splits leading and trailing
/// punctuation off each chunk, processes every piece, and joins chunks with
/// single spaces (pieces of one chunk are joined without a space).
TextResult process_text(std::string_view text, const Resources& resources);

}  // namespace gujhin
