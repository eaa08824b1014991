#include "gujhin/evaluator.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "gujhin/errors.hpp"
#include "gujhin/rule_file.hpp"
#include "gujhin/unicode.hpp"

namespace gujhin {
namespace {

std::vector<std::string> split_alternatives(std::string_view field) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = field.find('|', start);
    const auto piece = trim_ascii(field.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    out.push_back(to_nfc(piece));
    if (bar == std::string_view::npos) return out;
    start = bar + 1;
  }
}

}  // namespace

std::size_t GoldSet::word_count() const {
  std::size_t n = 0;
  for (const auto& sentence : sentences) n += sentence.size();
  return n;
}

std::vector<GoldRecord> GoldSet::flatten() const {
  std::vector<GoldRecord> out;
  out.reserve(word_count());
  for (const auto& sentence : sentences) out.insert(out.end(), sentence.begin(), sentence.end());
  return out;
}

GoldSet load_gold(std::string_view source) {
  GoldSet gold;
  std::vector<GoldRecord> current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto close_sentence = [&] {
    if (!current.empty()) gold.sentences.push_back(std::move(current));
    current.clear();
  };

  while (pos < source.size()) {
    auto end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto trimmed = trim_ascii(line);
    if (trimmed.empty()) {
      close_sentence();
      continue;
    }
    if (trimmed.front() == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected 3 tab-separated columns, found " + std::to_string(fields.size()));
    }
    GoldRecord record;
    record.line = line_no;
    record.source = to_nfc(trim_ascii(fields[0]));
    record.reference_translation = to_nfc(trim_ascii(fields[1]));
    if (record.source.empty()) throw ParseError(line_no, "empty source column");
    if (record.reference_translation.empty()) throw ParseError(line_no, "empty reference translation");

    record.acceptable_transliterations = split_alternatives(fields[2]);
    std::set<std::string> seen;
    for (const auto& alt : record.acceptable_transliterations) {
      if (alt.empty()) throw ParseError(line_no, "empty acceptable transliteration");
      if (!seen.insert(alt).second) throw ParseError(line_no, "duplicate acceptable transliteration '" + alt + "'");
    }
    current.push_back(std::move(record));
  }
  close_sentence();
  return gold;
}

Percentage Percentage::of(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) throw std::invalid_argument("percentage of an empty whole");
  // round(10000 * part / whole), halves away from zero.
  // Exact for counts below 2^49.
  const std::uint64_t scaled = part * 20000u + whole;
  return Percentage(static_cast<std::int64_t>(scaled / (2u * whole)));
}

std::string Percentage::str() const {
  const std::int64_t magnitude = hundredths_ < 0 ? -hundredths_ : hundredths_;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", hundredths_ < 0 ? "-" : "",
                static_cast<long long>(magnitude / 100), static_cast<long long>(magnitude % 100));
  return buf;
}

EvalReport make_report(std::size_t sentences, std::size_t words, std::size_t same_count, std::size_t wrong_count) {
  if (words == 0) throw EmptyEvaluation("evaluation has no words");
  if (same_count > words || wrong_count > words) {
    throw std::invalid_argument("word counts exceed the number of words evaluated");
  }
  EvalReport report;
  report.sentences = sentences;
  report.words = words;
  report.same_count = same_count;
  report.wrong_count = wrong_count;
  report.same_pct = Percentage::of(same_count, words);
  report.wrong_pct = Percentage::of(wrong_count, words);
  report.efficiency_pct = kHundredPercent - report.wrong_pct;
  return report;
}

EvalReport evaluate(const GoldSet& gold, std::span<const std::string> outputs) {
  const std::size_t words = gold.word_count();
  if (words == 0) throw EmptyEvaluation("gold set has no records");
  if (outputs.size() != words) {
    throw LengthMismatch("gold set has " + std::to_string(words) + " records but " +
                         std::to_string(outputs.size()) + " outputs were given");
  }

  std::size_t same = 0;
  std::size_t wrong = 0;
  std::size_t i = 0;
  for (const auto& sentence : gold.sentences) {
    for (const auto& record : sentence) {
      const std::string output = to_nfc(outputs[i++]);
      if (nfc_equal(output, record.reference_translation)) ++same;
      const bool acceptable =
          std::any_of(record.acceptable_transliterations.begin(), record.acceptable_transliterations.end(),
                      [&](const std::string& alt) { return nfc_equal(output, alt); });
      if (!acceptable) ++wrong;
    }
  }
  return make_report(gold.sentences.size(), words, same, wrong);
}

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (format == ReportFormat::KeyValue) {
    return "sentences=" + std::to_string(report.sentences) + "\n" + "words=" + std::to_string(report.words) + "\n" +
           "same=" + std::to_string(report.same_count) + "\n" + "same_pct=" + report.same_pct.str() + "\n" +
           "wrong=" + std::to_string(report.wrong_count) + "\n" + "wrong_pct=" + report.wrong_pct.str() + "\n" +
           "efficiency_pct=" + report.efficiency_pct.str() + "\n";
  }

  const std::pair<std::string, std::string> rows[] = {
      {"Sentences tested", std::to_string(report.sentences)},
      {"Words tested", std::to_string(report.words)},
      {"Words whose transliteration equals the translation", std::to_string(report.same_count)},
      {"Transliteration equals translation (%)", report.same_pct.str()},
      {"Words transliterated wrongly", std::to_string(report.wrong_count)},
      {"Wrong transliterations (%)", report.wrong_pct.str()},
      {"Transliteration efficiency (%)", report.efficiency_pct.str()},
  };
  std::size_t width = 0;
  for (const auto& [label, value] : rows) width = std::max(width, label.size());
  std::string out;
  for (const auto& [label, value] : rows) {
    out += label;
    out.append(width - label.size() + 2, ' ');
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace gujhin
