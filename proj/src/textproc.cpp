#include "eduseg/textproc.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "eduseg/utf8.hpp"

namespace eduseg {

namespace {

using utf8::is_apostrophe;
using utf8::is_letter;

const std::unordered_set<std::string>& clitic_exceptions() {
  static const std::unordered_set<std::string> kSet = {
      "aujourd'hui", "quelqu'un", "quelqu'une"};
  return kSet;
}

bool is_sentence_ender(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;
}

bool is_closing_mark(char32_t cp) {
  switch (cp) {
    case 0x00BB:  // »
    case 0x201D:  // ”
    case 0x2019:  // ’
    case U'"':
    case U'\'':
    case U')':
    case U']':
    case U'}':
      return true;
    default:
      return false;
  }
}

bool is_opening_mark(char32_t cp) {
  switch (cp) {
    case 0x00AB:  // «
    case 0x201C:  // “
    case 0x2018:  // ‘
    case U'"':
    case U'\'':
    case U'(':
    case U'[':
    case U'{':
      return true;
    default:
      return false;
  }
}

// Word-plus-dot forms that never end a sentence.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> kSet = {
      "m.",   "mm.",  "mme.",  "mmes.", "mlle.", "mlles.", "dr.",
      "me.",  "pr.",  "st.",   "ste.",  "cf.",   "etc.",   "ex.",
      "p.",   "pp.",  "vol.",  "chap.", "art.",  "no.",    "éd.",
      "trad.", "av.", "env."};
  return kSet;
}

bool is_abbreviation(const std::vector<char32_t>& cps, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && is_letter(cps[b - 1])) --b;
  if (b == dot) return false;
  if (dot - b == 1 && utf8::is_upper(cps[b])) return true;  // initials
  std::string word;
  for (std::size_t i = b; i < dot; ++i) utf8::append(utf8::lower(cps[i]), word);
  word.push_back('.');
  return abbreviations().count(word) > 0;
}

}  // namespace

std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::Verb: return "VERB";
    case Pos::Noun: return "NOUN";
    case Pos::Punct: return "PUNCT";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

std::string normalize_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t i = 0;
  while (i < word.size()) {
    const auto d = utf8::decode(word, i);
    char32_t cp = utf8::lower(d.cp);
    if (cp == 0x2019) cp = U'\'';
    utf8::append(cp, out);
    i += d.size;
  }
  return out;
}

std::vector<SentenceSpan> split_sentence_spans(std::string_view text) {
  const auto cps = utf8::decode_all(text);
  const std::size_t n = cps.size();
  std::vector<SentenceSpan> out;

  auto flush = [&](std::size_t begin, std::size_t end) {
    while (begin < end && utf8::is_space(cps[begin])) ++begin;
    while (end > begin && utf8::is_space(cps[end - 1])) --end;
    if (begin < end) out.push_back({utf8::encode(cps, begin, end), begin});
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (cps[i] == U'\n') {
      std::size_t j = i + 1;
      while (j < n && (cps[j] == U' ' || cps[j] == U'\t' || cps[j] == U'\r')) ++j;
      if (j < n && cps[j] == U'\n') {
        // paragraph break; also makes a punctuation-less title its own sentence
        flush(start, i);
        while (j < n && utf8::is_space(cps[j])) ++j;
        start = i = j;
        continue;
      }
      ++i;
      continue;
    }
    if (is_sentence_ender(cps[i])) {
      std::size_t j = i;
      while (j < n && is_sentence_ender(cps[j])) ++j;  // "...", "?!"
      if (j == i + 1 && cps[i] == U'.' && is_abbreviation(cps, i)) {
        i = j;
        continue;
      }
      std::size_t k = j;
      while (k < n && is_closing_mark(cps[k])) ++k;
      std::size_t m = k;
      while (m < n && utf8::is_space(cps[m])) ++m;
      if (m > k && m < n &&
          (utf8::is_upper(cps[m]) || utf8::is_digit(cps[m]) || is_opening_mark(cps[m]))) {
        flush(start, k);
        start = m;
        i = m;
        continue;
      }
      i = j;
      continue;
    }
    ++i;
  }
  flush(start, n);
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  for (auto& span : split_sentence_spans(text)) out.push_back(std::move(span.text));
  return out;
}

namespace {

// Shared chunk splitter. Emits [begin, end) code point ranges of the pieces
// a whitespace-free chunk breaks into: leading punctuation, clitic pieces,
// trailing punctuation.
void split_chunk(const std::vector<char32_t>& cps, std::size_t b, std::size_t e,
                 std::vector<std::pair<std::size_t, std::size_t>>& pieces) {
  // leading punctuation; an apostrophe glued to a following letter stays
  while (b < e && utf8::is_punct(cps[b]) &&
         !(is_apostrophe(cps[b]) && b + 1 < e && is_letter(cps[b + 1]))) {
    pieces.emplace_back(b, b + 1);
    ++b;
  }
  // trailing punctuation; an apostrophe after a letter belongs to the word
  std::size_t trail = e;
  while (trail > b && utf8::is_punct(cps[trail - 1]) &&
         !(is_apostrophe(cps[trail - 1]) && trail - 1 > b && is_letter(cps[trail - 2]))) {
    --trail;
  }
  if (b < trail) {
    std::string norm;
    for (std::size_t i = b; i < trail; ++i) {
      char32_t cp = utf8::lower(cps[i]);
      if (cp == 0x2019) cp = U'\'';
      utf8::append(cp, norm);
    }
    if (clitic_exceptions().count(norm) > 0) {
      pieces.emplace_back(b, trail);
    } else {
      std::size_t piece_start = b;
      for (std::size_t i = b; i < trail; ++i) {
        if (is_apostrophe(cps[i]) && i + 1 < trail && is_letter(cps[i + 1])) {
          pieces.emplace_back(piece_start, i + 1);
          piece_start = i + 1;
        }
      }
      if (piece_start < trail) pieces.emplace_back(piece_start, trail);
    }
  }
  for (std::size_t i = trail; i < e; ++i) pieces.emplace_back(i, i + 1);
}

}  // namespace

std::vector<Token> tokenize(std::string_view sentence, std::size_t base_offset) {
  const auto cps = utf8::decode_all(sentence);
  const std::size_t n = cps.size();
  std::vector<Token> out;
  std::vector<std::pair<std::size_t, std::size_t>> pieces;

  std::size_t i = 0;
  while (i < n) {
    while (i < n && utf8::is_space(cps[i])) ++i;
    if (i >= n) break;
    std::size_t j = i;
    while (j < n && !utf8::is_space(cps[j])) ++j;

    pieces.clear();
    split_chunk(cps, i, j, pieces);
    for (auto [b, e] : pieces) {
      Token t;
      t.surface = utf8::encode(cps, b, e);
      bool all_punct = true;
      for (std::size_t k = b; k < e; ++k) {
        char32_t cp = utf8::lower(cps[k]);
        if (cp == 0x2019) cp = U'\'';
        utf8::append(cp, t.norm);
        if (!utf8::is_punct(cps[k])) all_punct = false;
      }
      if (all_punct) t.pos = Pos::Punct;
      t.char_start = base_offset + b;
      t.char_end = base_offset + e;
      out.push_back(std::move(t));
    }
    i = j;
  }
  return out;
}

std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> words;
  for (const Token& t : tokenize(text)) words.push_back(t.norm);
  return words;
}

TagMap TagMap::load(std::istream& in) {
  TagMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    const auto first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos || trimmed[first] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error("tagmap line " + std::to_string(lineno) + ": expected fine_tag<TAB>coarse_tag");
    }
    std::string fine = line.substr(0, tab);
    std::string coarse = line.substr(tab + 1);
    const auto strip = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    strip(fine);
    strip(coarse);
    Pos pos;
    if (coarse == "VERB") pos = Pos::Verb;
    else if (coarse == "NOUN") pos = Pos::Noun;
    else if (coarse == "PUNCT") pos = Pos::Punct;
    else if (coarse == "OTHER") pos = Pos::Other;
    else throw Error("tagmap line " + std::to_string(lineno) + ": unknown coarse tag '" + coarse + "'");
    map.add(std::move(fine), pos);
  }
  return map;
}

TagMap TagMap::treetagger_defaults() {
  TagMap map;
  map.add("VER:*", Pos::Verb);
  map.add("NOM", Pos::Noun);
  map.add("NAM", Pos::Noun);
  map.add("ABR", Pos::Noun);
  map.add("PUN", Pos::Punct);
  map.add("PUN:*", Pos::Punct);
  map.add("SENT", Pos::Punct);
  return map;
}

void TagMap::add(std::string fine, Pos coarse) {
  if (!fine.empty() && fine.back() == '*') {
    fine.pop_back();
    prefixes_.emplace_back(std::move(fine), coarse);
  } else {
    exact_.emplace_back(std::move(fine), coarse);
  }
}

Pos TagMap::lookup(std::string_view fine) const {
  for (const auto& [tag, pos] : exact_) {
    if (tag == fine) return pos;
  }
  const std::pair<std::string, Pos>* best = nullptr;
  for (const auto& entry : prefixes_) {
    if (fine.substr(0, entry.first.size()) == entry.first) {
      if (best == nullptr || entry.first.size() > best->first.size()) best = &entry;
    }
  }
  return best != nullptr ? best->second : Pos::Other;
}

std::vector<std::vector<PretaggedToken>> read_pretagged(std::istream& in) {
  std::vector<std::vector<PretaggedToken>> sentences;
  std::vector<PretaggedToken> current;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!current.empty()) sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    const auto tab = line.find('\t');
    PretaggedToken tok;
    if (tab == std::string::npos) {
      tok.surface = line;
    } else {
      tok.surface = line.substr(0, tab);
      tok.fine_tag = line.substr(tab + 1);
    }
    current.push_back(std::move(tok));
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

void attach_pos(std::vector<Sentence>& sentences,
                const std::vector<std::vector<PretaggedToken>>& pretagged,
                const TagMap& tagmap) {
  if (sentences.size() != pretagged.size()) {
    const std::size_t at = std::min(sentences.size(), pretagged.size());
    throw AlignmentError(at, 0,
                         "pre-tagged input has " + std::to_string(pretagged.size()) +
                             " sentence(s), text has " + std::to_string(sentences.size()) +
                             "; first divergence at sentence " + std::to_string(at));
  }
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    auto& tokens = sentences[i].tokens;
    const auto& tagged = pretagged[i];
    if (tokens.size() != tagged.size()) {
      const std::size_t at = std::min(tokens.size(), tagged.size());
      throw AlignmentError(i, at,
                           "token count mismatch in sentence " + std::to_string(i) + ": text has " +
                               std::to_string(tokens.size()) + " token(s), pre-tagged input has " +
                               std::to_string(tagged.size()) + "; first divergence at token " +
                               std::to_string(at));
    }
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      if (tokens[j].is_punct()) continue;  // tokenizer-assigned PUNCT wins
      Pos pos = tagmap.lookup(tagged[j].fine_tag);
      // a non-punctuation surface cannot become PUNCT
      if (pos == Pos::Punct) pos = Pos::Other;
      tokens[j].pos = pos;
    }
  }
}

namespace {

// Frozen tables for the built-in fallback tagger.

const std::unordered_set<std::string>& fallback_function_words() {
  static const std::unordered_set<std::string> kSet = {
      "le",    "la",    "les",   "l'",    "un",     "une",    "des",   "du",
      "de",    "d'",    "au",    "aux",   "et",     "ou",     "ni",    "ne",
      "n'",    "pas",   "que",   "qu'",   "qui",    "quoi",   "dont",  "où",
      "à",     "en",    "dans",  "sur",   "sous",   "par",    "pour",  "avec",
      "sans",  "entre", "vers",  "chez",  "depuis", "pendant", "avant", "après",
      "ce",    "cet",   "cette", "ces",   "ça",     "cela",   "ceci",  "celui",
      "celle", "ceux",  "celles", "il",   "ils",    "elle",   "elles", "on",
      "nous",  "vous",  "je",    "j'",    "tu",     "se",     "s'",    "me",
      "m'",    "te",    "t'",    "y",     "son",    "sa",     "ses",   "leur",
      "leurs", "notre", "nos",   "votre", "vos",    "mon",    "ma",    "mes",
      "ton",   "ta",    "tes",   "si",    "comme",  "lorsque", "lorsqu'",
      "puisque", "puisqu'", "quand", "car", "donc",  "or",     "mais",  "soit",
      "tout",  "tous",  "toute", "toutes", "même",  "plus",   "moins", "très",
      "bien",  "aussi", "alors", "encore", "déjà",  "ici",    "là",    "non",
      "oui",   "c'",    "puis",  "enfin", "ainsi",  "sinon",  "certes"};
  return kSet;
}

const std::unordered_set<std::string>& fallback_closed_verbs() {
  static const std::unordered_set<std::string> kSet = {
      "est",     "sont",    "était",   "étaient", "être",    "suis",   "es",
      "êtes",    "sommes",  "sera",    "seront",  "serait",  "seraient", "fut",
      "furent",  "a",       "ont",     "avait",   "avaient", "aura",   "auront",
      "aurait",  "auraient", "eut",    "eurent",  "avoir",   "ayant",  "étant",
      "va",      "vont",    "allait",  "allaient", "ira",    "iront",  "aller",
      "fait",    "font",    "faisait", "faisaient", "fera",  "feront", "faire",
      "peut",    "peuvent", "pouvait", "pouvaient", "pourra", "pourront",
      "doit",    "doivent", "devait",  "devaient", "devra",  "devront",
      "veut",    "veulent", "voulait", "vient",   "viennent", "venait",
      "dit",     "disent",  "disait"};
  return kSet;
}

// Adverbs in -ment that are not covered by the -amment/-emment pattern.
const std::unordered_set<std::string>& fallback_ment_adverbs() {
  static const std::unordered_set<std::string> kSet = {
      "exactement",    "seulement",      "également",      "tellement",
      "vraiment",      "simplement",     "justement",      "finalement",
      "rapidement",    "lentement",      "heureusement",   "malheureusement",
      "précisément",   "probablement",   "certainement",   "globalement",
      "uniquement",    "réellement",     "actuellement",   "effectivement",
      "directement",   "immédiatement",  "complètement",   "entièrement",
      "premièrement",  "deuxièmement",   "troisièmement",  "autrement",
      "largement",     "clairement",     "fortement",      "véritablement",
      "naturellement", "généralement",   "particulièrement", "spécialement",
      "essentiellement", "principalement", "strictement",  "pleinement",
      "librement",     "franchement",    "sérieusement",   "officiellement",
      "comparativement", "corrélativement", "décidément",  "parallèlement",
      "réciproquement", "instantanément", "inversement",   "simultanément"};
  return kSet;
}

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

bool has_noun_suffix(const std::string& norm) {
  if (ends_with(norm, "ment") && norm.size() > 5) {
    if (ends_with(norm, "amment") || ends_with(norm, "emment")) return false;
    if (fallback_ment_adverbs().count(norm) > 0) return false;
    return true;
  }
  static const char* kSuffixes[] = {"tion", "sion", "ité", "isme",
                                    "ance", "ence", "esse", "iste"};
  for (const char* s : kSuffixes) {
    if (ends_with(norm, s) && norm.size() > std::string_view(s).size() + 1) return true;
  }
  return false;
}

bool has_verb_suffix(const std::string& norm) {
  static const char* kSuffixes[] = {"eraient", "issaient", "eront", "erait",
                                    "aient",   "èrent",    "irent", "inrent",
                                    "issent",  "issait",   "isse",  "era",
                                    "ira",     "ait",      "é",     "és",
                                    "ée",      "ées"};
  for (const char* s : kSuffixes) {
    if (ends_with(norm, s) && norm.size() > std::string_view(s).size() + 1) return true;
  }
  return false;
}

}  // namespace

void attach_pos_fallback(std::vector<Sentence>& sentences) {
  for (auto& sentence : sentences) {
    std::size_t first_word = sentence.tokens.size();
    for (std::size_t j = 0; j < sentence.tokens.size(); ++j) {
      if (!sentence.tokens[j].is_punct()) {
        first_word = j;
        break;
      }
    }
    for (std::size_t j = 0; j < sentence.tokens.size(); ++j) {
      Token& t = sentence.tokens[j];
      if (t.is_punct()) continue;
      if (fallback_function_words().count(t.norm) > 0) {
        t.pos = Pos::Other;
        continue;
      }
      if (fallback_closed_verbs().count(t.norm) > 0) {
        t.pos = Pos::Verb;
        continue;
      }
      const auto cps = utf8::decode_all(t.surface);
      std::size_t letters = 0, uppers = 0;
      for (char32_t cp : cps) {
        if (utf8::is_letter(cp)) {
          ++letters;
          if (utf8::is_upper(cp)) ++uppers;
        }
      }
      if (letters >= 2 && letters == uppers) {  // acronyms: PED, ONG
        t.pos = Pos::Noun;
        continue;
      }
      if (j != first_word && !cps.empty() && utf8::is_upper(cps[0])) {
        t.pos = Pos::Noun;  // capitalized mid-sentence, likely proper noun
        continue;
      }
      if (has_noun_suffix(t.norm)) {
        t.pos = Pos::Noun;
        continue;
      }
      if (has_verb_suffix(t.norm)) {
        t.pos = Pos::Verb;
        continue;
      }
      t.pos = Pos::Other;
    }
  }
}

}  // namespace eduseg
