#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gujhin {

struct GoldRecord {
  std::string source;
  std::string reference_translation;
  std::vector<std::string> acceptable_transliterations;
  std::size_t line = 0;
};

/// Gold records grouped by sentence.
struct GoldSet {
  std::vector<std::vector<GoldRecord>> sentences;

  std::size_t word_count() const;
  /// All records in file order.
  std::vector<GoldRecord> flatten() const;
};

/// Parses a gold TSV: `source<TAB>reference<TAB>translit1|translit2|...`.
/// Blank lines separate sentences; `#` lines are comments. Throws ParseError
/// with the line number on a wrong column count, an empty field, or a
/// repeated acceptable transliteration.
GoldSet load_gold(std::string_view source);

/// A percentage held as an exact count of hundredths.
class Percentage {
 public:
  constexpr Percentage() = default;
  static constexpr Percentage from_hundredths(std::int64_t h) { return Percentage(h); }
  /// 100 * part / whole rounded half-up to two decimals. `whole` must be > 0.
  static Percentage of(std::uint64_t part, std::uint64_t whole);

  constexpr std::int64_t hundredths() const noexcept { return hundredths_; }
  constexpr double value() const noexcept { return static_cast<double>(hundredths_) / 100.0; }
  /// Fixed two-decimal rendering, e.g. "93.09".
  std::string str() const;

  friend constexpr Percentage operator+(Percentage a, Percentage b) {
    return Percentage(a.hundredths_ + b.hundredths_);
  }
  friend constexpr Percentage operator-(Percentage a, Percentage b) {
    return Percentage(a.hundredths_ - b.hundredths_);
  }
  friend constexpr bool operator==(Percentage, Percentage) = default;
  friend constexpr auto operator<=>(Percentage, Percentage) = default;

 private:
  constexpr explicit Percentage(std::int64_t h) : hundredths_(h) {}
  std::int64_t hundredths_ = 0;
};

inline constexpr Percentage kHundredPercent = Percentage::from_hundredths(10000);

struct EvalReport {
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t same_count = 0;
  std::size_t wrong_count = 0;
  Percentage same_pct;
  Percentage wrong_pct;
  Percentage efficiency_pct;  // always 100 - wrong_pct
};

/// Builds a report from raw counts. Throws EmptyEvaluation when words == 0
/// and std::invalid_argument when a count exceeds words.
EvalReport make_report(std::size_t sentences, std::size_t words, std::size_t same_count, std::size_t wrong_count);

/// Scores `outputs` (aligned 1:1 with the flattened gold records) using
/// NFC-insensitive exact string equality. Throws LengthMismatch or
/// EmptyEvaluation.
EvalReport evaluate(const GoldSet& gold, std::span<const std::string> outputs);

enum class ReportFormat { Table, KeyValue };

std::string render_report(const EvalReport& report, ReportFormat format = ReportFormat::Table);

}  // namespace gujhin
