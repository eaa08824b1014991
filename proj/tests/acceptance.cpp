// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gujhin/errors.hpp"
#include "gujhin/evaluator.hpp"
#include "gujhin/pipeline.hpp"
#include "gujhin/pos_lexicon.hpp"
#include "gujhin/rule_file.hpp"
#include "gujhin/script_map.hpp"
#include "gujhin/stemmer.hpp"
#include "gujhin/unicode.hpp"
#include "test_support.hpp"

namespace {

using namespace gujhin;
namespace fs = std::filesystem;

constexpr double kPercentTolerance = 0.005;
constexpr int kPropertyCases = 10000;

struct Outcome {
  bool passed = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::map<std::string, std::string> read_expected(const std::string& path) {
  std::map<std::string, std::string> out;
  for (const auto& row : split_rule_rows(read_file(path))) {
    if (row.fields.size() == 2) out[row.fields[0]] = row.fields[1];
  }
  return out;
}

Outcome reference_count_metrics() {
  Outcome o;
  const EvalReport r = make_report(500, 7500, 4086, 518);
  o.check(std::fabs(r.same_pct.value() - 54.48) <= kPercentTolerance, "same_pct = " + r.same_pct.str());
  o.check(std::fabs(r.wrong_pct.value() - 6.91) <= kPercentTolerance, "wrong_pct = " + r.wrong_pct.str());
  o.check(std::fabs(r.efficiency_pct.value() - 93.09) <= kPercentTolerance,
          "efficiency_pct = " + r.efficiency_pct.str());
  o.check(r.same_pct.str() == "54.48" && r.wrong_pct.str() == "6.91" && r.efficiency_pct.str() == "93.09",
          "two-decimal rendering differs");
  if (o.passed) o.detail = "54.48 / 6.91 / 93.09";
  return o;
}

Outcome postposition_examples() {
  Outcome o;
  TransliterationTable table = build_default_table();
  apply_exceptions(table, testing::read_data("exceptions.tsv"));
  const StemRuleSet stems = load_rules(testing::read_data("stem_rules.tsv"));
  const TagRuleTable tags = load_tag_rules(testing::read_data("tag_rules.tsv"));
  TagLexicon lexicon;
  ingest_directory(lexicon, testing::data_path("corpus"));
  const Resources res{lexicon, stems, tags, table};

  const std::pair<const char*, const char*> cases[] = {
      {"રામે", "राम ने"}, {"ઘરે", "घर पर"}, {"રશ્મીએ", "रश्मी ने"}};
  for (const auto& [source, expected] : cases) {
    const TokenResult r = process_token(source, res);
    o.check(r.output == expected && r.path == TokenPath::TagConditioned,
            std::string(source) + " -> '" + r.output + "', expected '" + expected + "'");
  }
  const TokenResult verb = process_token("ચાલીએ", res);
  o.check(verb.output == "चालें", "ચાલીએ -> '" + verb.output + "', expected 'चालें'");
  o.check(verb.output != "चलें", "ચાલીએ unexpectedly produced the idiomatic form");
  if (o.passed) o.detail = "राम ने, घर पर, रश्मी ने; ચાલીએ -> चालें (documented deviation from चलें)";
  return o;
}

Outcome naive_fallback_equivalence() {
  Outcome o;
  const TransliterationTable table = build_default_table();
  const TagLexicon lexicon;
  const StemRuleSet stems;
  const TagRuleTable tags;
  const Resources res{lexicon, stems, tags, table};
  std::mt19937_64 rng(0xfa11bac);
  int agreed = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const std::string s = to_nfc(encode_utf8(testing::random_mapped(rng, 16)));
    const std::string naive = transliterate_string(table, s);
    const bool token_ok = process_token(s, res).output == naive;
    const bool text_ok = process_text(s, res).output == naive;
    bool round_trip = false;
    try {
      round_trip = reverse_transliterate(table, naive) == s;
    } catch (const Error&) {
    }
    if (token_ok && text_ok && round_trip) ++agreed;
  }
  o.check(agreed == kPropertyCases, std::to_string(agreed) + "/" + std::to_string(kPropertyCases) + " cases agreed");
  if (o.passed) o.detail = std::to_string(agreed) + "/" + std::to_string(kPropertyCases) + " cases";
  return o;
}

Outcome stemmer_properties() {
  Outcome o;
  const StemRuleSet seed = load_rules(testing::read_data("stem_rules.tsv"));
  std::mt19937_64 rng(0x57e3);
  const std::optional<std::string_view> tags[] = {std::nullopt, "NN", "NNP", "NLOC", "VM", "PRP"};
  std::uniform_int_distribution<std::size_t> pick_rule(0, seed.size() - 1);
  std::uniform_int_distribution<int> coin(0, 2);

  int concat_ok = 0;
  int guard_ok = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    std::string surface = encode_utf8(testing::random_mapped(rng, 5));
    if (coin(rng) != 0) surface += seed.rules()[pick_rule(rng)].suffix;
    const auto tag = tags[static_cast<std::size_t>(i) % std::size(tags)];
    const StemResult r = stem(seed, surface, tag);
    if (r.stem + r.suffix == surface && !r.stem.empty()) ++concat_ok;
    const StemRule* fired = r.rule_id ? seed.find(*r.rule_id) : nullptr;
    if (!r.rule_id || (fired != nullptr &&
                       codepoint_count(r.stem) >= static_cast<std::size_t>(fired->min_stem_codepoints))) {
      ++guard_ok;
    }
  }
  o.check(concat_ok == kPropertyCases, "concatenation held in " + std::to_string(concat_ok) + " cases");
  o.check(guard_ok == kPropertyCases, "minimum-stem guard held in " + std::to_string(guard_ok) + " cases");

  // Constructed nested pairs: the longer suffix wins even with a worse priority.
  int nested_ok = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    // stem() takes NFC input; redraw until normalization keeps the boundaries.
    std::string shorter, longer, surface;
    do {
      shorter = to_nfc(encode_utf8(testing::random_mapped(rng, 3)));
      longer = to_nfc(encode_utf8(testing::random_mapped(rng, 3)) + shorter);
      surface = to_nfc(encode_utf8(testing::random_mapped(rng, 4)) + longer);
    } while (!longer.ends_with(shorter) || longer == shorter || !surface.ends_with(longer) || surface == longer);
    const StemRuleSet pair({StemRule{shorter, 1, {}, -100, "short", 0}, StemRule{longer, 1, {}, 100, "long", 0}});
    if (stem(pair, surface).rule_id == std::optional<std::string>("long")) ++nested_ok;
  }
  o.check(nested_ok == kPropertyCases, "longer rule fired in " + std::to_string(nested_ok) + " nested cases");

  // Nested pairs inside the seed set (e.g. ઓમાંથી over માંથી over થી).
  int seed_pairs = 0;
  for (const auto& outer : seed.rules()) {
    for (const auto& inner : seed.rules()) {
      if (&outer == &inner || outer.suffix.size() <= inner.suffix.size() || !outer.suffix.ends_with(inner.suffix) ||
          outer.tag_pattern != inner.tag_pattern) {
        continue;
      }
      ++seed_pairs;
      const std::optional<std::string_view> tag =
          outer.tag_pattern.kind() == TagPattern::Kind::Exact ? std::optional<std::string_view>(outer.tag_pattern.tag())
                                                               : std::optional<std::string_view>("NN");
      const StemResult r = stem(seed, "ઘરઘર" + outer.suffix, tag);
      o.check(codepoint_count(r.suffix) >= codepoint_count(outer.suffix),
              "seed pair " + outer.rule_id + "/" + inner.rule_id + " fired " + r.rule_id.value_or("nothing"));
    }
  }
  o.check(seed_pairs > 0, "seed rule set has no nested pairs");
  if (o.passed) {
    o.detail = std::to_string(kPropertyCases) + " surfaces, " + std::to_string(kPropertyCases) +
               " constructed pairs, " + std::to_string(seed_pairs) + " seed pairs";
  }
  return o;
}

Outcome corpus_ingestion() {
  Outcome o;
  const auto expected = read_expected(testing::fixture_path("corpus_counted.expected"));
  const fs::path dir = testing::fixture_path("corpus_counted");

  TagLexicon lexicon;
  const auto diagnostics = ingest_directory(lexicon, dir);
  o.check(std::to_string(lexicon.total_sentences()) == expected.at("sentences"),
          "sentences " + std::to_string(lexicon.total_sentences()));
  o.check(std::to_string(lexicon.total_tokens()) == expected.at("tokens"),
          "tokens " + std::to_string(lexicon.total_tokens()));
  o.check(std::to_string(diagnostics.size()) == expected.at("malformed"),
          "diagnostics " + std::to_string(diagnostics.size()));
  o.check(std::to_string(lexicon.entries().size()) == expected.at("entries"),
          "entries " + std::to_string(lexicon.entries().size()));

  // Per-word counts written by the fixture generator.
  std::size_t rows = 0;
  for (const auto& row : split_rule_rows(read_file(testing::fixture_path("corpus_counted.expected")))) {
    if (row.fields.size() != 3) continue;
    ++rows;
    const auto* counts = lexicon.counts(row.fields[0]);
    const bool ok = counts != nullptr && counts->contains(row.fields[1]) &&
                    std::to_string(counts->at(row.fields[1])) == row.fields[2];
    o.check(ok, "count mismatch for " + row.fields[0] + "_" + row.fields[1]);
  }
  o.check(rows > 0, "no per-word counts in expected file");

  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) names.push_back(entry.path().filename().string());
  std::sort(names.begin(), names.end());
  int permutations = 0;
  do {
    TagLexicon permuted;
    for (const auto& name : names) {
      std::ifstream in(dir / name, std::ios::binary);
      ingest(permuted, in, name);
    }
    o.check(permuted == lexicon, "permutation " + std::to_string(permutations) + " differs");
    ++permutations;
  } while (std::next_permutation(names.begin(), names.end()));

  if (o.passed) {
    o.detail = expected.at("sentences") + " sentences / " + expected.at("tokens") + " tokens / " +
               expected.at("malformed") + " diagnostics; " + std::to_string(permutations) + " file orders agree";
  }
  return o;
}

Outcome desk_scale_evaluation() {
  Outcome o;
  const auto expected = read_expected(testing::fixture_path("gold_200.expected"));
  const GoldSet gold = load_gold(read_file(testing::fixture_path("gold_200.tsv")));

  TransliterationTable table = build_default_table();
  apply_exceptions(table, testing::read_data("exceptions.tsv"));
  const StemRuleSet stems = load_rules(testing::read_data("stem_rules.tsv"));
  const TagRuleTable tags = load_tag_rules(testing::read_data("tag_rules.tsv"));
  TagLexicon lexicon;
  ingest_directory(lexicon, testing::data_path("corpus"));
  const Resources res{lexicon, stems, tags, table};

  std::vector<std::string> outputs;
  for (const auto& record : gold.flatten()) outputs.push_back(process_text(record.source, res).output);
  const EvalReport report = evaluate(gold, outputs);

  const std::size_t words = std::stoul(expected.at("words"));
  const std::size_t planted = std::stoul(expected.at("wrong"));
  const double target = 100.0 * (1.0 - static_cast<double>(planted) / static_cast<double>(words));
  o.check(report.words == words, "words " + std::to_string(report.words));
  o.check(report.wrong_count == planted, "wrong " + std::to_string(report.wrong_count) + ", planted " +
                                             std::to_string(planted));
  o.check(std::to_string(report.same_count) == expected.at("same"), "same " + std::to_string(report.same_count));
  o.check(std::fabs(report.efficiency_pct.value() - target) <= kPercentTolerance,
          "efficiency " + report.efficiency_pct.str());
  if (o.passed) {
    o.detail = "k=" + std::to_string(planted) + " of " + std::to_string(words) + ", efficiency " +
               report.efficiency_pct.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 reference-count metrics", reference_count_metrics},
      {"2 ergative and locative examples", postposition_examples},
      {"3 naive-fallback equivalence", naive_fallback_equivalence},
      {"4 stemmer properties", stemmer_properties},
      {"5 corpus ingestion", corpus_ingestion},
      {"6 desk-scale evaluation", desk_scale_evaluation},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = Outcome{false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", outcome.passed ? "PASS" : "FAIL", name, outcome.detail.c_str());
    failures += outcome.passed ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
