#ifndef EDUSEG_UTF8_HPP
#define EDUSEG_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 / code point helpers, sufficient for French text.
// Classification tables cover ASCII, Latin-1 Supplement, Latin Extended-A
// and the general-punctuation characters that show up in real documents.

namespace eduseg::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t cp;
  std::size_t size;  // bytes consumed, >= 1
};

// Decodes the code point starting at byte `pos`. Malformed sequences yield
// U+FFFD and consume a single byte.
Decoded decode(std::string_view s, std::size_t pos);

void append(char32_t cp, std::string& out);
std::string encode(const std::vector<char32_t>& cps, std::size_t begin, std::size_t end);

std::vector<char32_t> decode_all(std::string_view s);

// True when `s` is well-formed UTF-8.
bool valid(std::string_view s);

// Number of code points in `s`.
std::size_t length(std::string_view s);

// Substring by code point offsets [begin, end).
std::string substr(std::string_view s, std::size_t begin, std::size_t end);

char32_t lower(char32_t cp);
bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_digit(char32_t cp);
bool is_apostrophe(char32_t cp);  // U+0027 or U+2019

}  // namespace eduseg::utf8

#endif
