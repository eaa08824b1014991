#include "gujhin/stemmer.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gujhin/errors.hpp"
#include "gujhin/rule_file.hpp"
#include "gujhin/unicode.hpp"

namespace gujhin {
namespace {

bool parse_int(std::string_view field, int& out) {
  field = trim_ascii(field);
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size();
}

}  // namespace

std::optional<TagPattern> TagPattern::parse(std::string_view field) {
  if (field.empty()) return std::nullopt;
  for (char32_t c : decode_utf8(field)) {
    if (is_space(c)) return std::nullopt;
  }
  if (field == "-") return unconditional();
  if (field == "*") return any_tag();
  return exact(std::string(field));
}

bool TagPattern::matches(std::optional<std::string_view> tag) const {
  switch (kind_) {
    case Kind::Unconditional:
      return true;
    case Kind::AnyTag:
      return tag.has_value();
    case Kind::Exact:
      return tag.has_value() && *tag == tag_;
  }
  return false;
}

std::string TagPattern::str() const {
  switch (kind_) {
    case Kind::Unconditional:
      return "-";
    case Kind::AnyTag:
      return "*";
    case Kind::Exact:
      return tag_;
  }
  return "-";
}

StemRuleSet::StemRuleSet(std::vector<StemRule> rules) {
  std::set<std::pair<std::string, TagPattern>> keys;
  std::set<std::string> ids;
  for (auto& rule : rules) {
    rule.suffix = to_nfc(rule.suffix);
    if (rule.suffix.empty()) throw std::invalid_argument("rule '" + rule.rule_id + "' has an empty suffix");
    if (rule.min_stem_codepoints < 1) {
      throw std::invalid_argument("rule '" + rule.rule_id + "' has min_stem_codepoints < 1");
    }
    if (!keys.emplace(rule.suffix, rule.tag_pattern).second) {
      throw DuplicateRule(rule.line, "duplicate rule for suffix '" + rule.suffix + "' with tag pattern '" +
                                         rule.tag_pattern.str() + "'");
    }
    if (!ids.insert(rule.rule_id).second) {
      throw DuplicateRule(rule.line, "duplicate rule id '" + rule.rule_id + "'");
    }
  }

  std::vector<std::size_t> lengths;
  lengths.reserve(rules.size());
  for (const auto& rule : rules) lengths.push_back(codepoint_count(rule.suffix));

  std::vector<std::size_t> order(rules.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] > lengths[b];
    return rules[a].priority < rules[b].priority;
  });

  rules_.reserve(rules.size());
  for (std::size_t i : order) rules_.push_back(std::move(rules[i]));
}

const StemRule* StemRuleSet::find(std::string_view rule_id) const {
  auto it = std::find_if(rules_.begin(), rules_.end(), [&](const StemRule& r) { return r.rule_id == rule_id; });
  return it == rules_.end() ? nullptr : &*it;
}

StemRuleSet load_rules(std::string_view source) {
  std::vector<StemRule> rules;
  for (auto& row : split_rule_rows(source)) {
    if (row.fields.size() != 5) {
      throw ParseError(row.line, "expected 5 tab-separated fields, found " + std::to_string(row.fields.size()));
    }
    StemRule rule;
    rule.line = row.line;
    rule.suffix = to_nfc(row.fields[0]);
    if (rule.suffix.empty()) throw ParseError(row.line, "empty suffix");

    if (trim_ascii(row.fields[1]) != "-" && !parse_int(row.fields[1], rule.min_stem_codepoints)) {
      throw ParseError(row.line, "min_stem '" + row.fields[1] + "' is not an integer");
    }
    if (rule.min_stem_codepoints < 1) throw ParseError(row.line, "min_stem must be at least 1");

    auto pattern = TagPattern::parse(trim_ascii(row.fields[2]));
    if (!pattern) throw ParseError(row.line, "bad tag pattern '" + row.fields[2] + "'");
    rule.tag_pattern = std::move(*pattern);

    if (!parse_int(row.fields[3], rule.priority)) {
      throw ParseError(row.line, "priority '" + row.fields[3] + "' is not an integer");
    }
    rule.rule_id = std::string(trim_ascii(row.fields[4]));
    if (rule.rule_id.empty()) throw ParseError(row.line, "empty rule id");
    rules.push_back(std::move(rule));
  }
  return StemRuleSet(std::move(rules));
}

StemResult stem(const StemRuleSet& rules, std::string_view surface, std::optional<std::string_view> tag) {
  const std::size_t surface_length = codepoint_count(surface);
  for (const auto& rule : rules.rules()) {
    if (!surface.ends_with(rule.suffix)) continue;
    if (!rule.tag_pattern.matches(tag)) continue;
    const std::string_view remainder = surface.substr(0, surface.size() - rule.suffix.size());
    // Byte-suffix match on valid UTF-8 is a codepoint-suffix match, so the
    // stem length is a plain difference.
    const std::size_t stem_length = surface_length - codepoint_count(rule.suffix);
    if (remainder.empty() || stem_length < static_cast<std::size_t>(rule.min_stem_codepoints)) continue;
    return StemResult{std::string(remainder), rule.suffix, rule.rule_id};
  }
  return StemResult{std::string(surface), {}, std::nullopt};
}

}  // namespace gujhin
