#include "eduseg/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "eduseg/utf8.hpp"

namespace eduseg {

namespace {

bool ends_with_apostrophe(const std::string& word) {
  if (word.empty()) return false;
  // normalized words carry the straight apostrophe, but accept both
  if (word.back() == '\'') return true;
  return word.size() >= 3 && word.compare(word.size() - 3, 3, "\xe2\x80\x99") == 0;
}

std::string strip_final_apostrophe(const std::string& word) {
  if (!word.empty() && word.back() == '\'') return word.substr(0, word.size() - 1);
  return word.substr(0, word.size() - 3);
}

bool all_punct_word(const std::string& word) {
  const auto cps = utf8::decode_all(word);
  if (cps.empty()) return false;
  return std::all_of(cps.begin(), cps.end(), [](char32_t cp) { return utf8::is_punct(cp); });
}

std::string join_key(std::span<const std::string> words) {
  std::string key;
  for (const auto& w : words) {
    if (!key.empty()) key.push_back(' ');
    key += w;
  }
  return key;
}

}  // namespace

std::string MarkerEntry::joined() const {
  std::string out;
  for (const auto& w : surface) {
    if (!out.empty() && !ends_with_apostrophe(out)) out.push_back(' ');
    out += w;
  }
  return out;
}

std::vector<MarkerEntry> expand_elision(const MarkerEntry& entry) {
  std::vector<MarkerEntry> out{entry};
  if (entry.surface.empty()) return out;
  const std::string& last = entry.surface.back();
  if (!ends_with_apostrophe(last)) return out;

  const std::string stem = strip_final_apostrophe(last);
  std::string companion;
  auto stem_ends = [&](std::string_view suffix) {
    return stem.size() >= suffix.size() &&
           stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (stem_ends("qu")) companion = stem + "e";       // qu' -> que
  else if (stem_ends("d")) companion = stem + "e";   // d'  -> de
  else if (stem_ends("s")) companion = stem + "i";   // s'  -> si
  else if (stem_ends("l")) companion = stem + "e";   // l'  -> le
  if (!companion.empty()) {
    MarkerEntry full = entry;
    full.surface.back() = companion;
    full.elided = false;
    out.push_back(std::move(full));
  }
  return out;
}

MarkerLexicon MarkerLexicon::load(std::istream& in, std::string language,
                                  const LexiconOptions& options) {
  std::vector<MarkerEntry> collected;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.size() >= 3 && line.compare(0, 3, "\xef\xbb\xbf") == 0) {
      line.erase(0, 3);  // UTF-8 BOM
    }
    if (!utf8::valid(line)) {
      throw EncodingError("lexicon line " + std::to_string(lineno) + " is not valid UTF-8");
    }
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    // " / "-separated multi-marker lines; a trailing separator is harmless
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const auto slash = line.find('/', pos);
      const std::string record =
          line.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
      pos = (slash == std::string::npos) ? line.size() + 1 : slash + 1;

      std::vector<std::string> words = tokenize_words(normalize_word(record));
      if (words.empty()) continue;
      if (!options.include_comma_marker &&
          std::all_of(words.begin(), words.end(), all_punct_word)) {
        continue;
      }
      MarkerEntry entry{std::move(words), false};
      entry.elided = ends_with_apostrophe(entry.surface.back());
      for (auto& expanded : expand_elision(entry)) collected.push_back(std::move(expanded));
    }
  }

  if (collected.empty()) {
    throw EmptyLexiconError("lexicon contains no entries after parsing");
  }

  std::sort(collected.begin(), collected.end());
  collected.erase(std::unique(collected.begin(), collected.end()), collected.end());

  MarkerLexicon lexicon;
  lexicon.language_ = std::move(language);
  lexicon.entries_ = std::move(collected);
  for (const auto& entry : lexicon.entries_) {
    lexicon.keys_.insert(join_key(entry.surface));
    lexicon.max_len_ = std::max(lexicon.max_len_, entry.surface.size());
  }
  return lexicon;
}

MarkerLexicon MarkerLexicon::load_file(const std::string& path, std::string language,
                                       const LexiconOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file: " + path);
  return load(in, std::move(language), options);
}

MarkerLexicon MarkerLexicon::from_markers(std::span<const std::string> markers,
                                          std::string language,
                                          const LexiconOptions& options) {
  if (markers.empty()) {
    // An explicitly empty marker list is a valid degenerate lexicon: nothing
    // matches, so segmentation falls back to sentence boundaries only.
    MarkerLexicon lexicon;
    lexicon.language_ = std::move(language);
    return lexicon;
  }
  std::ostringstream joined;
  for (const auto& m : markers) joined << m << '\n';
  std::istringstream in(joined.str());
  return load(in, std::move(language), options);
}

std::size_t MarkerLexicon::elided_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [](const MarkerEntry& e) { return e.elided; }));
}

bool MarkerLexicon::contains(std::span<const std::string> words) const {
  if (words.empty() || words.size() > max_len_) return false;
  return keys_.count(join_key(words)) > 0;
}

std::vector<MarkerOccurrence> match_markers(std::span<const Token> tokens,
                                            const MarkerLexicon& lexicon) {
  std::vector<MarkerOccurrence> occurrences;
  std::vector<std::string> window;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::size_t longest = std::min(lexicon.max_len(), tokens.size() - i);
    std::size_t matched = 0;
    for (std::size_t len = longest; len >= 1; --len) {
      window.clear();
      for (std::size_t k = 0; k < len; ++k) window.push_back(tokens[i + k].norm);
      if (lexicon.contains(window)) {
        matched = len;
        break;
      }
    }
    if (matched > 0) {
      occurrences.push_back({i, matched});
      i += matched;
    } else {
      ++i;
    }
  }
  return occurrences;
}

}  // namespace eduseg
