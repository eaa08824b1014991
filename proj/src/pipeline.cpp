#include "gujhin/pipeline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gujhin/errors.hpp"
#include "gujhin/rule_file.hpp"
#include "gujhin/unicode.hpp"

namespace gujhin {
namespace {

int pattern_rank(const TagPattern& pattern) {
  switch (pattern.kind()) {
    case TagPattern::Kind::Exact:
      return 0;
    case TagPattern::Kind::AnyTag:
      return 1;
    case TagPattern::Kind::Unconditional:
      return 2;
  }
  return 3;
}

// Gujarati-block punctuation (e.g. the abbreviation sign) stays inside words.
bool is_detachable(char32_t c) { return is_punctuation(c) && !is_gujarati(c); }

TokenResult punctuation_token(std::u32string_view run, TextEnd end, const TransliterationTable& table) {
  TokenResult result;
  result.source = encode_utf8(run);
  result.output = transliterate_string(table, result.source, end);
  result.path = TokenPath::Passthrough;
  return result;
}

}  // namespace

TagRuleTable::TagRuleTable(std::vector<TagSuffixRule> rules) : rules_(std::move(rules)) {
  std::set<std::pair<std::string, TagPattern>> keys;
  std::set<std::string> ids;
  for (auto& rule : rules_) {
    rule.suffix = to_nfc(rule.suffix);
    if (rule.suffix.empty()) throw std::invalid_argument("tag rule '" + rule.rule_id + "' has an empty suffix");
    if (rule.target.empty()) throw std::invalid_argument("tag rule '" + rule.rule_id + "' has an empty target");
    if (!keys.emplace(rule.suffix, rule.tag_pattern).second) {
      throw DuplicateRule(rule.line, "duplicate tag rule for suffix '" + rule.suffix + "' with tag pattern '" +
                                         rule.tag_pattern.str() + "'");
    }
    if (!ids.insert(rule.rule_id).second) throw DuplicateRule(rule.line, "duplicate rule id '" + rule.rule_id + "'");
  }
}

const TagSuffixRule* TagRuleTable::match(std::string_view suffix, std::optional<std::string_view> tag) const {
  const TagSuffixRule* best = nullptr;
  for (const auto& rule : rules_) {
    if (rule.suffix != suffix || !rule.tag_pattern.matches(tag)) continue;
    if (best == nullptr || pattern_rank(rule.tag_pattern) < pattern_rank(best->tag_pattern)) best = &rule;
  }
  return best;
}

const TagSuffixRule* TagRuleTable::find(std::string_view rule_id) const {
  auto it = std::find_if(rules_.begin(), rules_.end(), [&](const TagSuffixRule& r) { return r.rule_id == rule_id; });
  return it == rules_.end() ? nullptr : &*it;
}

TagRuleTable load_tag_rules(std::string_view source) {
  std::vector<TagSuffixRule> rules;
  for (auto& row : split_rule_rows(source)) {
    if (row.fields.size() != 5) {
      throw ParseError(row.line, "expected 5 tab-separated fields, found " + std::to_string(row.fields.size()));
    }
    TagSuffixRule rule;
    rule.line = row.line;
    rule.suffix = to_nfc(row.fields[0]);
    if (rule.suffix.empty()) throw ParseError(row.line, "empty suffix");

    auto pattern = TagPattern::parse(trim_ascii(row.fields[1]));
    if (!pattern) throw ParseError(row.line, "bad tag pattern '" + row.fields[1] + "'");
    rule.tag_pattern = std::move(*pattern);

    const auto action = trim_ascii(row.fields[2]);
    if (action == "SEP") {
      rule.action = SuffixAction::EmitSeparateWord;
    } else if (action == "ATTACH") {
      rule.action = SuffixAction::AttachToStem;
    } else {
      throw ParseError(row.line, "action must be SEP or ATTACH, found '" + row.fields[2] + "'");
    }

    rule.target = to_nfc(row.fields[3]);
    if (rule.target.empty()) throw ParseError(row.line, "empty target");
    rule.rule_id = std::string(trim_ascii(row.fields[4]));
    if (rule.rule_id.empty()) throw ParseError(row.line, "empty rule id");
    rules.push_back(std::move(rule));
  }
  return TagRuleTable(std::move(rules));
}

std::string_view to_string(TokenPath path) {
  switch (path) {
    case TokenPath::TagConditioned:
      return "tag_conditioned";
    case TokenPath::NaiveFallback:
      return "naive_fallback";
    case TokenPath::Passthrough:
      return "passthrough";
  }
  return "unknown";
}

TokenResult process_token(std::string_view token, const Resources& resources) {
  TokenResult result;
  result.source = std::string(token);

  if (!contains_gujarati(token)) {
    result.output = result.source;
    result.path = TokenPath::Passthrough;
    return result;
  }

  if (auto tag = resources.lexicon.lookup(token)) {
    const StemResult stemmed = stem(resources.stem_rules, token, *tag);
    if (!stemmed.suffix.empty()) {
      if (const TagSuffixRule* rule = resources.tag_rules.match(stemmed.suffix, *tag)) {
        result.output = transliterate_string(resources.table, stemmed.stem, TextEnd::Continues);
        if (rule->action == SuffixAction::EmitSeparateWord) result.output += ' ';
        result.output += rule->target;
        result.tag_used = std::move(*tag);
        result.stem_rule_id = stemmed.rule_id;
        result.tag_suffix_rule_id = rule->rule_id;
        result.path = TokenPath::TagConditioned;
        return result;
      }
    }
  }

  result.output = transliterate_string(resources.table, token);
  result.path = TokenPath::NaiveFallback;
  return result;
}

std::string TextResult::reconstruct_source() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i < separators.size()) out += separators[i];
    out += tokens[i].source;
  }
  if (separators.size() > tokens.size()) out += separators.back();
  return out;
}

TextResult process_text(std::string_view text, const Resources& resources) {
  const std::u32string cps = decode_utf8(to_nfc(text));
  TextResult result;
  std::u32string pending_separator;

  auto push = [&](TokenResult token, std::u32string_view separator) {
    result.separators.push_back(encode_utf8(separator));
    result.tokens.push_back(std::move(token));
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    const std::size_t space_begin = i;
    while (i < cps.size() && is_space(cps[i])) ++i;
    const std::u32string_view separator(cps.data() + space_begin, i - space_begin);
    if (i == cps.size()) {
      pending_separator = separator;
      break;
    }

    const std::size_t chunk_begin = i;
    while (i < cps.size() && !is_space(cps[i])) ++i;
    const std::u32string_view chunk(cps.data() + chunk_begin, i - chunk_begin);

    std::size_t core_begin = 0;
    while (core_begin < chunk.size() && is_detachable(chunk[core_begin])) ++core_begin;
    std::size_t core_end = chunk.size();
    while (core_end > core_begin && is_detachable(chunk[core_end - 1])) --core_end;

    // The chunk always ends at whitespace or the end of the text.
    if (core_begin == chunk.size()) {
      push(punctuation_token(chunk, TextEnd::Boundary, resources.table), separator);
      continue;
    }
    std::u32string_view next_separator = separator;
    if (core_begin > 0) {
      push(punctuation_token(chunk.substr(0, core_begin), TextEnd::Continues, resources.table), next_separator);
      next_separator = {};
    }
    push(process_token(encode_utf8(chunk.substr(core_begin, core_end - core_begin)), resources), next_separator);
    if (core_end < chunk.size()) {
      push(punctuation_token(chunk.substr(core_end), TextEnd::Boundary, resources.table), {});
    }
  }
  result.separators.push_back(encode_utf8(pending_separator));

  for (std::size_t t = 0; t < result.tokens.size(); ++t) {
    if (t > 0 && !result.separators[t].empty()) result.output += ' ';
    result.output += result.tokens[t].output;
  }
  return result;
}

}  // namespace gujhin
