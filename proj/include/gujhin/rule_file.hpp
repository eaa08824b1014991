#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gujhin {

/// One non-blank, non-comment line of a tab-separated data file.
struct RuleRow {
  std::size_t line = 0;  // 1-based
  std::vector<std::string> fields;
};

/// Splits UTF-8 text into tab-separated rows. Blank lines and lines whose
/// first non-blank character is '#' are skipped; a trailing '\r' is dropped.
/// Empty fields are preserved.
std::vector<RuleRow> split_rule_rows(std::string_view source);

/// Splits `line` on every tab, keeping empty fields.
std::vector<std::string> split_tabs(std::string_view line);

std::string_view trim_ascii(std::string_view text);

/// Reads a whole file; throws IoError naming the path on failure.
std::string read_file(const std::string& path);

}  // namespace gujhin
