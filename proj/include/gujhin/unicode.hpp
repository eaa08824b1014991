#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace gujhin {

/// Decodes UTF-8. Ill-formed sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t codepoint);

std::size_t codepoint_count(std::string_view text);

/// Canonical composition (NFC) of UTF-8 text.
std::string to_nfc(std::string_view text);
bool is_nfc(std::string_view text);

/// Equality after NFC normalization of both sides.
bool nfc_equal(std::string_view a, std::string_view b);

bool is_space(char32_t c);
bool is_punctuation(char32_t c);
bool is_assigned(char32_t c);
/// ICU general category value (UCharCategory) of `c`.
int general_category(char32_t c);

/// "U+0A97" style rendering, at least four hex digits.
std::string format_codepoint(char32_t c);
/// Parses "U+0A97" (case-insensitive prefix); returns false on malformed input.
bool parse_codepoint(std::string_view text, char32_t& out);

}  // namespace gujhin
