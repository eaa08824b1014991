#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gujhin/errors.hpp"
#include "gujhin/evaluator.hpp"
#include "gujhin/pipeline.hpp"
#include "gujhin/pos_lexicon.hpp"
#include "gujhin/rule_file.hpp"
#include "gujhin/script_map.hpp"
#include "gujhin/stemmer.hpp"
#include "gujhin/unicode.hpp"

namespace gujhin::cli {
namespace {

namespace fs = std::filesystem;

struct Config {
  std::string exceptions_path;
  std::string stem_rules_path;
  std::string tag_rules_path;
  std::string corpus_dir;
  std::string lexicon_path;
  std::string gold_path;
  bool trace = false;
  bool no_danda = false;
};

/// Resource-loading failure; the message already names the file.
struct LoadError {
  std::string message;
};

struct LoadedResources {
  TransliterationTable table;
  StemRuleSet stem_rules;
  TagRuleTable tag_rules;
  TagLexicon lexicon;

  Resources view() const { return Resources{lexicon, stem_rules, tag_rules, table}; }
};

std::string read_required(const std::string& path, std::string_view what) {
  std::error_code ec;
  if (!fs::exists(path, ec)) throw LoadError{std::string(what) + " '" + path + "' does not exist"};
  try {
    return read_file(path);
  } catch (const IoError& e) {
    throw LoadError{std::string(what) + ": " + e.what()};
  }
}

template <typename Fn>
auto parse_file(const std::string& path, std::string_view what, Fn&& parse) {
  const std::string content = read_required(path, what);
  try {
    return parse(content);
  } catch (const ParseError& e) {
    throw LoadError{path + ": " + e.what()};
  }
}

LoadedResources load_resources(const Config& config, std::ostream& err) {
  LoadedResources res;
  res.table = build_default_table();
  if (!config.exceptions_path.empty()) {
    parse_file(config.exceptions_path, "exceptions file", [&](std::string_view s) {
      apply_exceptions(res.table, s);
      return 0;
    });
  }
  if (config.no_danda) res.table.set_punctuation_enabled(U'.', false);
  if (!config.stem_rules_path.empty()) {
    res.stem_rules = parse_file(config.stem_rules_path, "stem rule file", [](std::string_view s) { return load_rules(s); });
  }
  if (!config.tag_rules_path.empty()) {
    res.tag_rules =
        parse_file(config.tag_rules_path, "tag rule file", [](std::string_view s) { return load_tag_rules(s); });
  }
  if (!config.lexicon_path.empty()) {
    res.lexicon =
        parse_file(config.lexicon_path, "lexicon snapshot", [](std::string_view s) { return read_snapshot(s); });
  } else if (!config.corpus_dir.empty()) {
    std::error_code ec;
    if (!fs::is_directory(config.corpus_dir, ec)) {
      throw LoadError{"corpus directory '" + config.corpus_dir + "' does not exist"};
    }
    for (const auto& d : ingest_directory(res.lexicon, config.corpus_dir)) {
      err << "warning: " << format_diagnostic(d) << '\n';
    }
  }
  return res;
}

void emit_trace(const TokenResult& token, std::ostream& err) {
  nlohmann::ordered_json line;
  line["source"] = token.source;
  line["output"] = token.output;
  line["path"] = std::string(to_string(token.path));
  line["tag"] = token.tag_used ? nlohmann::ordered_json(*token.tag_used) : nullptr;
  line["stem_rule"] = token.stem_rule_id ? nlohmann::ordered_json(*token.stem_rule_id) : nullptr;
  line["tag_rule"] = token.tag_suffix_rule_id ? nlohmann::ordered_json(*token.tag_suffix_rule_id) : nullptr;
  err << line.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

/// Input file argument, or `in` when empty / "-".
class InputSource {
 public:
  InputSource(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw LoadError{"cannot open input '" + path + "'"};
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

int cmd_translit(const Config& config, const std::string& input, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  const LoadedResources res = load_resources(config, err);
  const Resources view = res.view();
  InputSource source(input, in);
  std::string line;
  while (std::getline(source.get(), line)) {
    const bool had_newline = !source.get().eof();
    const bool had_cr = !line.empty() && line.back() == '\r';
    if (had_cr) line.pop_back();
    const TextResult result = process_text(line, view);
    if (config.trace) {
      for (const auto& token : result.tokens) emit_trace(token, err);
    }
    out << result.output;
    if (had_cr) out << '\r';
    if (had_newline) out << '\n';
  }
  return 0;
}

int cmd_stem(const Config& config, const std::string& input, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const LoadedResources res = load_resources(config, err);
  InputSource source(input, in);
  out << "surface\tstem\tsuffix\trule_id\n";
  std::string word;
  while (source.get() >> word) {
    std::string surface = word;
    std::optional<std::string> tag;
    if (word.find('_') != std::string::npos) {
      try {
        TaggedToken token = parse_token(word);
        surface = std::move(token.surface);
        tag = std::move(token.tag);
      } catch (const MalformedToken&) {
      }
    }
    surface = to_nfc(surface);
    if (!tag) tag = res.lexicon.lookup(surface);
    const StemResult result =
        stem(res.stem_rules, surface, tag ? std::optional<std::string_view>(*tag) : std::nullopt);
    out << surface << '\t' << result.stem << '\t' << result.suffix << '\t' << result.rule_id.value_or("") << '\n';
    if (config.trace) {
      err << surface << ": tag=" << tag.value_or("-") << " rule=" << result.rule_id.value_or("-") << '\n';
    }
  }
  return 0;
}

int cmd_ingest(const Config& config, const std::string& corpus_arg, const std::string& output_path,
               std::ostream& out, std::ostream& err) {
  const std::string dir = corpus_arg.empty() ? config.corpus_dir : corpus_arg;
  if (dir.empty()) throw LoadError{"no corpus directory given"};
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw LoadError{"corpus directory '" + dir + "' does not exist"};

  TagLexicon lexicon;
  std::vector<Diagnostic> diagnostics;
  try {
    diagnostics = ingest_directory(lexicon, dir);
  } catch (const IoError& e) {
    throw LoadError{e.what()};
  }
  for (const auto& d : diagnostics) err << format_diagnostic(d) << '\n';

  out << "sentences=" << lexicon.total_sentences() << '\n'
      << "tokens=" << lexicon.total_tokens() << '\n'
      << "entries=" << lexicon.entries().size() << '\n'
      << "malformed=" << diagnostics.size() << '\n';

  if (!output_path.empty()) {
    std::ofstream snapshot(output_path, std::ios::binary | std::ios::trunc);
    if (!snapshot) throw LoadError{"cannot write lexicon snapshot '" + output_path + "'"};
    write_snapshot(lexicon, snapshot);
    if (!snapshot.flush()) throw LoadError{"error writing lexicon snapshot '" + output_path + "'"};
  }
  return 0;
}

int cmd_eval(const Config& config, const std::string& gold_arg, ReportFormat format, std::ostream& out,
             std::ostream& err) {
  const std::string path = gold_arg.empty() ? config.gold_path : gold_arg;
  if (path.empty()) throw LoadError{"no gold file given"};
  const GoldSet gold = parse_file(path, "gold file", [](std::string_view s) { return load_gold(s); });
  const LoadedResources res = load_resources(config, err);
  const Resources view = res.view();

  std::vector<std::string> outputs;
  outputs.reserve(gold.word_count());
  for (const auto& sentence : gold.sentences) {
    for (const auto& record : sentence) {
      const TextResult result = process_text(record.source, view);
      if (config.trace) {
        for (const auto& token : result.tokens) emit_trace(token, err);
      }
      outputs.push_back(result.output);
    }
  }
  try {
    out << render_report(evaluate(gold, outputs), format);
  } catch (const EmptyEvaluation& e) {
    throw LoadError{path + ": " + e.what()};
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gujarati to Hindi transliteration with stemming and POS-tag rules", "gujhin"};
  app.set_config("--config", "", "INI/TOML configuration file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  app.add_option("--exceptions", config.exceptions_path, "Codepoint exceptions file");
  app.add_option("--stem-rules", config.stem_rules_path, "Suffix-stripping rule file");
  app.add_option("--tag-rules", config.tag_rules_path, "Tag-conditioned suffix rule file");
  app.add_option("--corpus", config.corpus_dir, "Directory of word_TAG corpus files (*.txt)");
  app.add_option("--lexicon", config.lexicon_path, "Lexicon snapshot written by 'ingest' (takes precedence over --corpus)");
  app.add_option("--gold", config.gold_path, "Gold evaluation file");
  app.add_flag("--trace", config.trace, "Write per-token decisions to stderr");
  app.add_flag("--no-danda", config.no_danda, "Keep sentence-final '.' instead of mapping it to '।'");

  std::string translit_input;
  auto* translit = app.add_subcommand("translit", "Transliterate text (stdin or FILE) to Devanagari");
  translit->add_option("input", translit_input, "Input file, '-' for stdin");

  std::string stem_input;
  auto* stem_cmd = app.add_subcommand("stem", "Print surface, stem, suffix and rule id for each word");
  stem_cmd->add_option("input", stem_input, "Word list file, '-' for stdin; word_TAG forms supply a tag");

  std::string ingest_dir;
  std::string ingest_output;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a tag lexicon from a corpus directory");
  ingest_cmd->add_option("corpus_dir", ingest_dir, "Corpus directory (defaults to --corpus)");
  ingest_cmd->add_option("-o,--output", ingest_output, "Write a lexicon snapshot to this path");

  std::string eval_gold;
  std::string eval_format = "table";
  auto* eval_cmd = app.add_subcommand("eval", "Score the pipeline against a gold file");
  eval_cmd->add_option("gold", eval_gold, "Gold file (defaults to --gold)");
  eval_cmd->add_option("--format", eval_format, "Report format")->check(CLI::IsMember({"table", "kv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*translit) return cmd_translit(config, translit_input, in, out, err);
    if (*stem_cmd) return cmd_stem(config, stem_input, in, out, err);
    if (*ingest_cmd) return cmd_ingest(config, ingest_dir, ingest_output, out, err);
    if (*eval_cmd) {
      return cmd_eval(config, eval_gold, eval_format == "kv" ? ReportFormat::KeyValue : ReportFormat::Table, out, err);
    }
  } catch (const LoadError& e) {
    err << "error: " << e.message << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace gujhin::cli
