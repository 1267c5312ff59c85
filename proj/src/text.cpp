#include "concord/text.hpp"

#include <algorithm>
#include <cctype>

namespace concord::text {

std::vector<std::size_t> utf8_char_starts(std::string_view s) {
  std::vector<std::size_t> starts;
  starts.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size();) {
    starts.push_back(i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if ((c & 0x80u) == 0x00u) len = 1;
    else if ((c & 0xE0u) == 0xC0u) len = 2;
    else if ((c & 0xF0u) == 0xE0u) len = 3;
    else if ((c & 0xF8u) == 0xF0u) len = 4;
    // Truncated or invalid sequences advance one byte so indexing stays total.
    i += len;
    if (i > s.size()) i = s.size();
  }
  starts.push_back(s.size());
  return starts;
}

std::size_t utf8_length(std::string_view s) {
  return utf8_char_starts(s).size() - 1;
}

std::string utf8_substr(std::string_view s, std::size_t char_begin,
                        std::size_t char_end) {
  const auto starts = utf8_char_starts(s);
  const std::size_t n = starts.size() - 1;
  char_begin = std::min(char_begin, n);
  char_end = std::min(char_end, n);
  if (char_end <= char_begin) return {};
  return std::string(s.substr(starts[char_begin],
                              starts[char_end] - starts[char_begin]));
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

bool is_all_caps(std::string_view token) {
  bool saw_alpha = false;
  for (char ch : token) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalpha(c)) {
      saw_alpha = true;
      if (!std::isupper(c)) return false;
    }
  }
  return saw_alpha;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace concord::text
