#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gujhin {

struct TaggedToken {
  std::string surface;
  std::string tag;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

/// Splits `word_TAG` on the last underscore. Throws MalformedToken when there
/// is no underscore or either side is empty.
TaggedToken parse_token(std::string_view text);

/// A malformed token skipped during ingestion.
struct Diagnostic {
  std::string source;   // file name or stream label
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, in codepoints
  std::string token;
  std::string reason;
};

std::string format_diagnostic(const Diagnostic& d);

/// Word -> tag -> count table built from tagged corpora.
class TagLexicon {
 public:
  using TagCounts = std::map<std::string, std::uint64_t>;

  /// `surface` is NFC-normalized before counting. `count` must be >= 1.
  void add(std::string_view surface, std::string_view tag, std::uint64_t count = 1);
  void add_sentences(std::uint64_t n = 1) { total_sentences_ += n; }

  /// Most frequent tag; ties go to the lexicographically smallest tag.
  std::optional<std::string> lookup(std::string_view surface) const;
  const TagCounts* counts(std::string_view surface) const;

  const std::map<std::string, TagCounts, std::less<>>& entries() const noexcept { return entries_; }
  std::uint64_t total_tokens() const noexcept { return total_tokens_; }
  std::uint64_t total_sentences() const noexcept { return total_sentences_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const TagLexicon&, const TagLexicon&) = default;

 private:
  std::map<std::string, TagCounts, std::less<>> entries_;
  std::uint64_t total_tokens_ = 0;
  std::uint64_t total_sentences_ = 0;
};

inline std::optional<std::string> lookup(const TagLexicon& lexicon, std::string_view surface) {
  return lexicon.lookup(surface);
}

/// Counts every well-formed token of a `word_TAG` corpus (one sentence per
/// line) into `lexicon`. Each non-blank line is one sentence. Malformed tokens
/// are reported, not counted. Throws IoError if the stream fails.
std::vector<Diagnostic> ingest(TagLexicon& lexicon, std::istream& corpus, std::string_view source_name = "<stream>");

/// Ingests every `*.txt` file under `dir`, recursively, in lexicographic
/// path order. Throws IoError if `dir` is not a readable directory.
std::vector<Diagnostic> ingest_directory(TagLexicon& lexicon, const std::filesystem::path& dir);

/// Snapshot format, version 1:
///
///   #gujhin-lexicon<TAB>1
///   #sentences<TAB>N
///   #tokens<TAB>N
///   surface<TAB>tag<TAB>count     (sorted by surface, then tag)
void write_snapshot(const TagLexicon& lexicon, std::ostream& out);
/// Throws ParseError on a bad header, malformed row, or token-count mismatch.
TagLexicon read_snapshot(std::string_view source);

}  // namespace gujhin
