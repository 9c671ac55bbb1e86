#ifndef EDUSEG_TEXTPROC_HPP
#define EDUSEG_TEXTPROC_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eduseg/errors.hpp"

namespace eduseg {

// Coarse tagset. The segmentation rules only ever consult verbs and nouns;
// everything that is neither is OTHER, punctuation is PUNCT.
enum class Pos { Verb, Noun, Punct, Other };

std::string_view pos_name(Pos pos);

struct Token {
  std::string surface;      // original slice of the document
  std::string norm;         // lowercase, typographic apostrophe folded to '
  std::optional<Pos> pos;   // Punct is set by the tokenizer, the rest by attach_pos
  std::size_t char_start = 0;  // code point offsets into the document
  std::size_t char_end = 0;

  bool is_punct() const { return pos == Pos::Punct; }
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;
};

// Lowercase fold plus apostrophe unification; the normal form used for both
// lexicon entries and token norms.
std::string normalize_word(std::string_view word);

// Splits a document into sentence strings. Sentence-final punctuation
// (. ! ? …) splits when followed by whitespace and an uppercase letter,
// digit or opening bracket/quote; a short list of French abbreviations
// (M., Mme., etc., cf., ...) never splits; a paragraph break always ends
// the current sentence, so a punctuation-less title line stands alone.
std::vector<std::string> split_sentences(std::string_view text);

struct SentenceSpan {
  std::string text;        // trimmed sentence
  std::size_t char_start;  // code point offset of the first character
};

std::vector<SentenceSpan> split_sentence_spans(std::string_view text);

// Whitespace tokenization with punctuation detached into single-character
// PUNCT tokens and elided clitics split after the apostrophe ("qu'une" ->
// "qu'" + "une"). Offsets are code points, relative to `base_offset`.
std::vector<Token> tokenize(std::string_view sentence, std::size_t base_offset = 0);

// Same word-splitting convention as tokenize(), returning normalized forms
// only. Lexicon entries go through this so that marker words line up
// token-for-token with tokenized text.
std::vector<std::string> tokenize_words(std::string_view text);

// Maps a fine-grained tagger label set onto the coarse tagset. Lines are
// `fine_tag<TAB>coarse_tag`; a trailing '*' in fine_tag matches any suffix.
// Unmapped labels resolve to OTHER.
class TagMap {
 public:
  static TagMap load(std::istream& in);
  static TagMap treetagger_defaults();

  void add(std::string fine, Pos coarse);
  Pos lookup(std::string_view fine) const;

 private:
  std::vector<std::pair<std::string, Pos>> exact_;
  std::vector<std::pair<std::string, Pos>> prefixes_;  // entries ending in '*'
};

struct PretaggedToken {
  std::string surface;
  std::string fine_tag;
};

// One token per line as `surface<TAB>fine_tag`, blank line = sentence break.
std::vector<std::vector<PretaggedToken>> read_pretagged(std::istream& in);

// Attaches coarse tags from a pre-tagged file aligned token-for-token.
// PUNCT assigned by the tokenizer is never overwritten. Throws
// AlignmentError naming the first divergent (sentence, token) position.
void attach_pos(std::vector<Sentence>& sentences,
                const std::vector<std::vector<PretaggedToken>>& pretagged,
                const TagMap& tagmap);

// Best-effort built-in tagger (closed-class word lists plus suffix
// heuristics). Exists so the pipeline runs without external tools; a real
// tagger fed through attach_pos is the reference path.
void attach_pos_fallback(std::vector<Sentence>& sentences);

}  // namespace eduseg

#endif
