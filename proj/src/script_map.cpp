#include "gujhin/script_map.hpp"

#include <stdexcept>
#include <vector>

#include "gujhin/errors.hpp"
#include "gujhin/rule_file.hpp"
#include "gujhin/unicode.hpp"

namespace gujhin {

bool contains_gujarati(std::string_view text) {
  for (char32_t c : decode_utf8(text)) {
    if (is_gujarati(c)) return true;
  }
  return false;
}

void TransliterationTable::add_mapping(char32_t source, char32_t target) {
  if (!is_assigned(target)) {
    throw std::invalid_argument("mapping target " + format_codepoint(target) + " is unassigned");
  }
  if (mappings_.contains(source)) {
    throw std::invalid_argument(format_codepoint(source) + " is already mapped");
  }
  if (inverse_.contains(target)) {
    throw std::invalid_argument(format_codepoint(target) + " is already the image of " +
                                format_codepoint(inverse_.at(target)));
  }
  mappings_.emplace(source, target);
  inverse_.emplace(target, source);
}

void TransliterationTable::set_exception(char32_t source, std::string target) {
  exceptions_.insert_or_assign(source, std::move(target));
}

void TransliterationTable::erase_exception(char32_t source) { exceptions_.erase(source); }

void TransliterationTable::set_punctuation_rule(char32_t source, PunctuationRule rule) {
  punctuation_.insert_or_assign(source, std::move(rule));
}

void TransliterationTable::set_punctuation_enabled(char32_t source, bool enabled) {
  if (auto it = punctuation_.find(source); it != punctuation_.end()) it->second.enabled = enabled;
}

std::optional<char32_t> TransliterationTable::mapping_for(char32_t source) const {
  if (auto it = mappings_.find(source); it != mappings_.end()) return it->second;
  return std::nullopt;
}

const std::string* TransliterationTable::exception_for(char32_t source) const {
  auto it = exceptions_.find(source);
  return it == exceptions_.end() ? nullptr : &it->second;
}

const PunctuationRule* TransliterationTable::punctuation_for(char32_t source) const {
  auto it = punctuation_.find(source);
  return it == punctuation_.end() ? nullptr : &it->second;
}

std::optional<char32_t> TransliterationTable::preimage_of(char32_t target) const {
  auto it = inverse_.find(target);
  if (it == inverse_.end() || exceptions_.contains(it->second)) return std::nullopt;
  return it->second;
}

TransliterationTable build_default_table() {
  TransliterationTable table;
  for (char32_t c = kGujaratiBlockFirst; c <= kGujaratiBlockLast; ++c) {
    if (!is_assigned(c)) continue;
    const char32_t image = c - kGujaratiToDevanagariOffset;
    const bool mappable = c >= kMappableFirst && c <= kMappableLast && is_assigned(image) &&
                          general_category(image) == general_category(c);
    if (mappable) {
      table.add_mapping(c, image);
    } else {
      table.set_exception(c, "");
    }
  }
  table.set_punctuation_rule(U'.', PunctuationRule{"।", true});
  return table;
}

void apply_exceptions(TransliterationTable& table, std::string_view source) {
  for (const auto& row : split_rule_rows(source)) {
    // A missing second field is an empty (pass-through) target.
    if (row.fields.size() > 2) {
      throw ParseError(row.line, "expected 2 tab-separated fields, found " + std::to_string(row.fields.size()));
    }
    char32_t c = 0;
    if (!parse_codepoint(row.fields[0], c)) {
      throw ParseError(row.line, "bad codepoint '" + row.fields[0] + "'");
    }
    table.set_exception(c, row.fields.size() == 2 ? to_nfc(row.fields[1]) : std::string{});
  }
}

std::string transliterate_char(const TransliterationTable& table, char32_t c) {
  std::string out;
  if (const std::string* target = table.exception_for(c)) {
    if (target->empty()) {
      append_utf8(out, c);
    } else {
      out = *target;
    }
  } else if (auto mapped = table.mapping_for(c)) {
    append_utf8(out, *mapped);
  } else {
    append_utf8(out, c);
  }
  return out;
}

std::string transliterate_string(const TransliterationTable& table, std::string_view text, TextEnd end) {
  const std::u32string cps = decode_utf8(to_nfc(text));
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    if (const PunctuationRule* rule = table.punctuation_for(c); rule != nullptr && rule->enabled) {
      const bool sentence_final = i + 1 < cps.size() ? is_space(cps[i + 1]) : end == TextEnd::Boundary;
      if (sentence_final) {
        out += rule->target;
        continue;
      }
    }
    out += transliterate_char(table, c);
  }
  return out;
}

std::string reverse_transliterate(const TransliterationTable& table, std::string_view text) {
  // Enabled single-codepoint punctuation targets map back to their source.
  std::map<char32_t, char32_t> punctuation_inverse;
  for (const auto& [source, rule] : table.punctuation_rules()) {
    const std::u32string target = decode_utf8(rule.target);
    if (rule.enabled && target.size() == 1) punctuation_inverse.emplace(target.front(), source);
  }

  const std::u32string cps = decode_utf8(text);
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i];
    if (auto pre = table.preimage_of(c)) {
      append_utf8(out, *pre);
    } else if (auto it = punctuation_inverse.find(c); it != punctuation_inverse.end()) {
      append_utf8(out, it->second);
    } else if (is_devanagari(c)) {
      throw NotInvertible(c, i, format_codepoint(c) + " at position " + std::to_string(i) +
                                    " has no preimage in the table");
    } else {
      append_utf8(out, c);
    }
  }
  return out;
}

}  // namespace gujhin
