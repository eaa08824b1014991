#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gujhin {

/// Tag condition attached to a rule. Tags are opaque: NN does not match NNP.
class TagPattern {
 public:
  enum class Kind {
    Unconditional,  // "-": applies with or without a tag
    AnyTag,         // "*": applies to any present tag
    Exact,
  };

  TagPattern() = default;
  static TagPattern unconditional() { return TagPattern{}; }
  static TagPattern any_tag() { return TagPattern{Kind::AnyTag, {}}; }
  static TagPattern exact(std::string tag) { return TagPattern{Kind::Exact, std::move(tag)}; }

  /// "-" -> Unconditional, "*" -> AnyTag, anything else -> Exact. Returns
  /// nullopt for an empty or whitespace-containing field.
  static std::optional<TagPattern> parse(std::string_view field);

  bool matches(std::optional<std::string_view> tag) const;

  Kind kind() const noexcept { return kind_; }
  const std::string& tag() const noexcept { return tag_; }
  /// Inverse of parse().
  std::string str() const;

  friend bool operator==(const TagPattern&, const TagPattern&) = default;
  friend auto operator<=>(const TagPattern&, const TagPattern&) = default;

 private:
  TagPattern(Kind kind, std::string tag) : kind_(kind), tag_(std::move(tag)) {}

  Kind kind_ = Kind::Unconditional;
  std::string tag_;
};

inline constexpr int kDefaultMinStem = 2;

struct StemRule {
  std::string suffix;  // NFC, non-empty
  int min_stem_codepoints = kDefaultMinStem;
  TagPattern tag_pattern;
  int priority = 0;
  std::string rule_id;
  std::size_t line = 0;  // source line, 0 when built in code
};

/// Suffix rules in firing order: longer suffix first (in codepoints), then
/// ascending priority, then original order.
class StemRuleSet {
 public:
  StemRuleSet() = default;
  /// Validates and sorts. Throws std::invalid_argument on an empty suffix or
  /// min_stem_codepoints < 1, DuplicateRule on a repeated (suffix, tag) key or
  /// rule id.
  explicit StemRuleSet(std::vector<StemRule> rules);

  const std::vector<StemRule>& rules() const noexcept { return rules_; }
  bool empty() const noexcept { return rules_.empty(); }
  std::size_t size() const noexcept { return rules_.size(); }
  const StemRule* find(std::string_view rule_id) const;

 private:
  std::vector<StemRule> rules_;
};

struct StemResult {
  std::string stem;
  std::string suffix;  // empty when no rule fired
  std::optional<std::string> rule_id;

  friend bool operator==(const StemResult&, const StemResult&) = default;
};

/// Parses a rule file: `suffix<TAB>min_stem<TAB>tag_pattern<TAB>priority<TAB>rule_id`.
/// `-` as min_stem selects kDefaultMinStem; `-` as tag_pattern means no tag
/// condition. Throws ParseError / DuplicateRule carrying the line number.
StemRuleSet load_rules(std::string_view source);

/// Strips at most one suffix: the first rule in set order whose suffix ends
/// `surface`, whose tag pattern accepts `tag`, and which leaves at least
/// min_stem_codepoints codepoints. `surface` is expected in NFC.
StemResult stem(const StemRuleSet& rules, std::string_view surface,
                std::optional<std::string_view> tag = std::nullopt);

}  // namespace gujhin
