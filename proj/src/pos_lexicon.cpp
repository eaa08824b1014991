#include "gujhin/pos_lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "gujhin/errors.hpp"
#include "gujhin/rule_file.hpp"
#include "gujhin/unicode.hpp"

namespace gujhin {
namespace {

constexpr std::string_view kSnapshotMagic = "#gujhin-lexicon";
constexpr std::string_view kSnapshotVersion = "1";

bool parse_count(std::string_view field, std::uint64_t& out) {
  if (field.empty()) return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size();
}

struct Span {
  std::size_t begin;  // codepoint index
  std::size_t end;
};

std::vector<Span> whitespace_tokens(const std::u32string& line) {
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t begin = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    spans.push_back({begin, i});
  }
  return spans;
}

}  // namespace

TaggedToken parse_token(std::string_view text) {
  const auto underscore = text.rfind('_');
  if (underscore == std::string_view::npos) {
    throw MalformedToken("token '" + std::string(text) + "' has no '_' separator");
  }
  TaggedToken token{std::string(text.substr(0, underscore)), std::string(text.substr(underscore + 1))};
  if (token.surface.empty()) throw MalformedToken("token '" + std::string(text) + "' has an empty word");
  if (token.tag.empty()) throw MalformedToken("token '" + std::string(text) + "' has an empty tag");
  for (char32_t c : decode_utf8(token.tag)) {
    if (is_space(c)) throw MalformedToken("token '" + std::string(text) + "' has whitespace in its tag");
  }
  return token;
}

std::string format_diagnostic(const Diagnostic& d) {
  return d.source + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": malformed token '" +
         d.token + "': " + d.reason;
}

void TagLexicon::add(std::string_view surface, std::string_view tag, std::uint64_t count) {
  if (count == 0) return;
  auto& tags = entries_[to_nfc(surface)];
  tags[std::string(tag)] += count;
  total_tokens_ += count;
}

const TagLexicon::TagCounts* TagLexicon::counts(std::string_view surface) const {
  auto it = entries_.find(surface);
  if (it == entries_.end() && !is_nfc(surface)) it = entries_.find(to_nfc(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> TagLexicon::lookup(std::string_view surface) const {
  const TagCounts* tags = counts(surface);
  if (tags == nullptr || tags->empty()) return std::nullopt;
  // std::map iterates tags in ascending order, so the first maximum wins ties.
  auto best = tags->begin();
  for (auto it = tags->begin(); it != tags->end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

std::vector<Diagnostic> ingest(TagLexicon& lexicon, std::istream& corpus, std::string_view source_name) {
  std::vector<Diagnostic> diagnostics;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(corpus, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::u32string line = decode_utf8(raw);
    const auto spans = whitespace_tokens(line);
    if (spans.empty()) continue;
    lexicon.add_sentences();
    for (const auto& span : spans) {
      const std::string text = encode_utf8(std::u32string_view(line).substr(span.begin, span.end - span.begin));
      try {
        const TaggedToken token = parse_token(text);
        lexicon.add(token.surface, token.tag);
      } catch (const MalformedToken& e) {
        diagnostics.push_back(Diagnostic{std::string(source_name), line_no, span.begin + 1, text, e.what()});
      }
    }
  }
  if (corpus.bad()) throw IoError("read error in '" + std::string(source_name) + "'");
  return diagnostics;
}

std::vector<Diagnostic> ingest_directory(TagLexicon& lexicon, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("'" + dir.string() + "' is not a readable directory");

  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(dir, ec); !ec && it != fs::recursive_directory_iterator();
       it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".txt") files.push_back(it->path());
  }
  if (ec) throw IoError("cannot list '" + dir.string() + "': " + ec.message());
  std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
    return a.lexically_relative(dir).generic_string() < b.lexically_relative(dir).generic_string();
  });

  std::vector<Diagnostic> diagnostics;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open '" + file.string() + "'");
    auto found = ingest(lexicon, in, file.string());
    diagnostics.insert(diagnostics.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  }
  return diagnostics;
}

void write_snapshot(const TagLexicon& lexicon, std::ostream& out) {
  out << kSnapshotMagic << '\t' << kSnapshotVersion << '\n';
  out << "#sentences\t" << lexicon.total_sentences() << '\n';
  out << "#tokens\t" << lexicon.total_tokens() << '\n';
  for (const auto& [surface, tags] : lexicon.entries()) {
    for (const auto& [tag, count] : tags) out << surface << '\t' << tag << '\t' << count << '\n';
  }
}

TagLexicon read_snapshot(std::string_view source) {
  TagLexicon lexicon;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::uint64_t declared_tokens = 0;
  std::uint64_t declared_sentences = 0;
  bool saw_magic = false;
  bool saw_sentences = false;
  bool saw_tokens = false;
  while (pos < source.size()) {
    auto end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fields = split_tabs(line);
    if (!saw_magic) {
      if (fields.size() != 2 || fields[0] != kSnapshotMagic) throw ParseError(line_no, "not a lexicon snapshot");
      if (fields[1] != kSnapshotVersion) throw ParseError(line_no, "unsupported snapshot version '" + fields[1] + "'");
      saw_magic = true;
      continue;
    }
    if (fields.size() == 2 && fields[0] == "#sentences") {
      if (!parse_count(fields[1], declared_sentences)) throw ParseError(line_no, "bad sentence count");
      saw_sentences = true;
      continue;
    }
    if (fields.size() == 2 && fields[0] == "#tokens") {
      if (!parse_count(fields[1], declared_tokens)) throw ParseError(line_no, "bad token count");
      saw_tokens = true;
      continue;
    }
    if (fields.size() != 3) throw ParseError(line_no, "expected surface<TAB>tag<TAB>count");
    std::uint64_t count = 0;
    if (fields[0].empty() || fields[1].empty() || !parse_count(fields[2], count) || count == 0) {
      throw ParseError(line_no, "malformed lexicon row");
    }
    lexicon.add(fields[0], fields[1], count);
  }
  if (!saw_magic) throw ParseError(line_no, "empty snapshot");
  if (!saw_sentences || !saw_tokens) throw ParseError(line_no, "snapshot header is missing counts");
  if (declared_tokens != lexicon.total_tokens()) {
    throw ParseError(line_no, "token count " + std::to_string(declared_tokens) + " does not match row sum " +
                                  std::to_string(lexicon.total_tokens()));
  }
  lexicon.add_sentences(declared_sentences);
  return lexicon;
}

}  // namespace gujhin
