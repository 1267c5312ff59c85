#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace concord::text {

/// Byte offsets of each UTF-8 character start, plus one past-the-end entry.
/// Character indices throughout the corpus format refer to these positions.
std::vector<std::size_t> utf8_char_starts(std::string_view s);

/// Number of UTF-8 characters in s.
std::size_t utf8_length(std::string_view s);

/// Substring by character (not byte) offsets, clamped to the text.
std::string utf8_substr(std::string_view s, std::size_t char_begin,
                        std::size_t char_end);

/// ASCII lowercase; non-ASCII bytes pass through unchanged.
std::string lower(std::string_view s);

bool is_ascii_punct(char c);

/// True when the token has at least one ASCII letter and every ASCII letter
/// is uppercase.
bool is_all_caps(std::string_view token);

/// Splits on single spaces; used for multiword resource entries.
std::vector<std::string> split_words(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace concord::text
