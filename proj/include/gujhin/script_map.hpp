#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace gujhin {

inline constexpr char32_t kGujaratiBlockFirst = 0x0A80;
inline constexpr char32_t kGujaratiBlockLast = 0x0AFF;
inline constexpr char32_t kDevanagariBlockFirst = 0x0900;
inline constexpr char32_t kDevanagariBlockLast = 0x097F;

/// Codepoints eligible for the offset mapping.
inline constexpr char32_t kMappableFirst = 0x0A81;
inline constexpr char32_t kMappableLast = 0x0AEF;

/// Distance between the structurally parallel Gujarati and Devanagari blocks.
inline constexpr char32_t kGujaratiToDevanagariOffset = 0x0180;

constexpr bool is_gujarati(char32_t c) { return c >= kGujaratiBlockFirst && c <= kGujaratiBlockLast; }
constexpr bool is_devanagari(char32_t c) { return c >= kDevanagariBlockFirst && c <= kDevanagariBlockLast; }

bool contains_gujarati(std::string_view text);

struct PunctuationRule {
  std::string target;
  bool enabled = true;
};

/// Whether the character after the end of the string is a sentence boundary.
/// Only consulted for punctuation in the final position.
enum class TextEnd { Boundary, Continues };

/// Codepoint-level source-to-target script table.
///
/// Lookup precedence is exceptions, then mappings, then identity. Mappings are
/// kept injective so that the non-exception part can be inverted.
class TransliterationTable {
 public:
  /// Throws std::invalid_argument if `source` is already mapped, `target` is
  /// already the image of another codepoint, or `target` is unassigned.
  void add_mapping(char32_t source, char32_t target);

  /// Empty `target` means pass-through. Replaces any earlier exception.
  void set_exception(char32_t source, std::string target);
  void erase_exception(char32_t source);

  void set_punctuation_rule(char32_t source, PunctuationRule rule);
  /// No-op for characters without a rule.
  void set_punctuation_enabled(char32_t source, bool enabled);

  const std::map<char32_t, char32_t>& mappings() const noexcept { return mappings_; }
  const std::map<char32_t, std::string>& exceptions() const noexcept { return exceptions_; }
  const std::map<char32_t, PunctuationRule>& punctuation_rules() const noexcept { return punctuation_; }

  std::optional<char32_t> mapping_for(char32_t source) const;
  const std::string* exception_for(char32_t source) const;
  const PunctuationRule* punctuation_for(char32_t source) const;

  /// Preimage of `target` among mappings whose source is not overridden by an
  /// exception.
  std::optional<char32_t> preimage_of(char32_t target) const;

 private:
  std::map<char32_t, char32_t> mappings_;
  std::map<char32_t, char32_t> inverse_;
  std::map<char32_t, std::string> exceptions_;
  std::map<char32_t, PunctuationRule> punctuation_;
};

/// Offset-rule table: every assigned codepoint in U+0A81..U+0AEF whose image
/// at -0x0180 is assigned with the same general category is mapped; every
/// other assigned Gujarati-block codepoint becomes a pass-through exception.
/// "." -> "।" is enabled as a sentence-final punctuation rule.
TransliterationTable build_default_table();

/// Applies an exceptions file (`U+XXXX<TAB>target`, `#` comments) on top of
/// `table`. Throws ParseError with the 1-based line number.
void apply_exceptions(TransliterationTable& table, std::string_view source);

std::string transliterate_char(const TransliterationTable& table, char32_t c);

/// NFC-normalizes `text`, maps each codepoint, and applies punctuation rules
/// to characters followed by whitespace (or by the end, when `end` is
/// Boundary).
std::string transliterate_string(const TransliterationTable& table, std::string_view text,
                                 TextEnd end = TextEnd::Boundary);

/// Inverse of transliterate_string on the non-exception domain. Enabled
/// punctuation targets are mapped back to their sources. Input is not
/// normalized. Throws NotInvertible for a Devanagari-block codepoint with no
/// preimage.
std::string reverse_transliterate(const TransliterationTable& table, std::string_view text);

}  // namespace gujhin
