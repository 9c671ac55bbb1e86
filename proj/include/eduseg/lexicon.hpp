#ifndef EDUSEG_LEXICON_HPP
#define EDUSEG_LEXICON_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "eduseg/errors.hpp"
#include "eduseg/textproc.hpp"

namespace eduseg {

// One discourse marker: normalized word forms, split with the same
// convention as the text tokenizer so matching is word-for-word.
struct MarkerEntry {
  std::vector<std::string> surface;
  bool elided = false;  // final word ends with an apostrophe

  // display form: "à condition d'", "qu'il" (no space after an apostrophe)
  std::string joined() const;

  bool operator==(const MarkerEntry&) const = default;
  auto operator<=>(const MarkerEntry&) const = default;
};

// If the final word is an elided form, returns the entry plus its expanded
// companion ("près qu'" -> also "près que"; "à condition d'" -> also
// "à condition de"; bare "s'" -> "si", "l'" -> "le"). Non-elided entries
// map to themselves. Both apostrophe code points (' and ’) are handled.
std::vector<MarkerEntry> expand_elision(const MarkerEntry& entry);

struct LexiconOptions {
  // The bare "," record splits every comma when enabled; off by default
  // because comma-internal segments are the common case.
  bool include_comma_marker = false;
};

// Immutable marker set with longest-match lookup support. Safe to share
// across threads once constructed.
class MarkerLexicon {
 public:
  // Parses a line-oriented stream: one marker per line, '#' comments and
  // blank lines ignored, " / "-separated multi-marker lines accepted.
  // Entries are normalized, elision-expanded and deduplicated.
  // Throws EncodingError on invalid UTF-8 and EmptyLexiconError when no
  // entry survives parsing.
  static MarkerLexicon load(std::istream& in, std::string language,
                            const LexiconOptions& options = {});
  static MarkerLexicon load_file(const std::string& path, std::string language,
                                 const LexiconOptions& options = {});
  static MarkerLexicon from_markers(std::span<const std::string> markers,
                                    std::string language,
                                    const LexiconOptions& options = {});

  const std::vector<MarkerEntry>& entries() const { return entries_; }
  const std::string& language() const { return language_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t max_len() const { return max_len_; }
  std::size_t elided_count() const;

  // True when the normalized word sequence equals some entry.
  bool contains(std::span<const std::string> words) const;

 private:
  std::vector<MarkerEntry> entries_;  // sorted
  std::unordered_set<std::string> keys_;  // space-joined word forms
  std::string language_;
  std::size_t max_len_ = 1;
};

struct MarkerOccurrence {
  std::size_t start = 0;   // token index
  std::size_t length = 0;  // token count, >= 1

  bool operator==(const MarkerOccurrence&) const = default;
};

// Left-to-right scan over the tokens, longest match first at each position;
// matches never overlap and scanning resumes after a match. A span only
// matches when its token norms equal an entry word-for-word, so punctuation
// tokens cannot take part in a word-marker match.
std::vector<MarkerOccurrence> match_markers(std::span<const Token> tokens,
                                            const MarkerLexicon& lexicon);

}  // namespace eduseg

#endif
