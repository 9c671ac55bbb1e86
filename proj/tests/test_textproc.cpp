#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "eduseg/textproc.hpp"
#include "eduseg/utf8.hpp"

using namespace eduseg;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

std::vector<std::string> norms(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.norm);
  return out;
}

}  // namespace

TEST_SUITE("normalize_word") {
  TEST_CASE("lowercase folding covers French accents") {
    CHECK(normalize_word("De") == "de");
    CHECK(normalize_word("PED") == "ped");
    CHECK(normalize_word("Élève") == "élève");
    CHECK(normalize_word("Œuvre") == "œuvre");
    CHECK(normalize_word("ÇA") == "ça");
  }

  TEST_CASE("typographic apostrophe folds to the plain one") {
    CHECK(normalize_word("qu’une") == "qu'une");
    CHECK(normalize_word("L’") == "l'");
  }
}

TEST_SUITE("split_sentences") {
  TEST_CASE("splits on final punctuation before an uppercase start") {
    auto s = split_sentences(
        "en faveur d'une interdiction totale de l'expédition de déchets dangereux à "
        "destinations des PED. Plus exactement, la Convention originale n'interdisait pas "
        "l'exportation de déchets.");
    REQUIRE(s.size() == 2);
    CHECK(s[0].back() == '.');
    CHECK(s[1].rfind("Plus exactement", 0) == 0);
  }

  TEST_CASE("empty text gives no sentences") {
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("   \n \t ").empty());
  }

  TEST_CASE("a paragraph break ends a sentence even without punctuation") {
    auto s = split_sentences("Le Ban Amendment\n\nAprès avoir adopté la Convention, tout change.");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "Le Ban Amendment");
    CHECK(s[1].rfind("Après avoir", 0) == 0);
  }

  TEST_CASE("common abbreviations do not split") {
    CHECK(split_sentences("M. Dupont arrive. Mme. Claire sourit.").size() == 2);
    CHECK(split_sentences("Voir cf. Section Deux pour la suite.").size() == 1);
    // "etc." is on the abbreviation list, so even a following capital does
    // not end the sentence.
    CHECK(split_sentences("Des fruits, des légumes, etc. Rien d'autre.").size() == 1);
  }

  TEST_CASE("question and exclamation marks split too") {
    auto s = split_sentences("Qui vient ? Personne ne sait ! Tant pis.");
    CHECK(s.size() == 3);
  }

  TEST_CASE("no split before a lowercase continuation") {
    CHECK(split_sentences("Il resta. puis repartit sans bruit.").size() == 1);
  }

  TEST_CASE("a digit can open a sentence") {
    CHECK(split_sentences("Tout commence en 1959. 38 documents furent signés.").size() == 2);
  }

  TEST_CASE("sentence spans carry document offsets") {
    std::string text = "Première phrase. Deuxième phrase.";
    auto spans = split_sentence_spans(text);
    REQUIRE(spans.size() == 2);
    CHECK(spans[0].char_start == 0);
    CHECK(spans[0].text == "Première phrase.");
    CHECK(spans[1].text == "Deuxième phrase.");
    CHECK(utf8::substr(text, spans[1].char_start,
                       spans[1].char_start + utf8::length(spans[1].text)) == spans[1].text);
  }
}

TEST_SUITE("tokenize") {
  TEST_CASE("detaches trailing punctuation") {
    auto tokens = tokenize("la capitale du Vaucluse,");
    CHECK(surfaces(tokens) ==
          std::vector<std::string>{"la", "capitale", "du", "Vaucluse", ","});
    CHECK(tokens.back().pos == Pos::Punct);
    CHECK_FALSE(tokens[3].is_punct());
  }

  TEST_CASE("splits elided clitics after the apostrophe") {
    CHECK(surfaces(tokenize("qu'une procédure")) ==
          std::vector<std::string>{"qu'", "une", "procédure"});
    CHECK(surfaces(tokenize("d'Avignon")) == std::vector<std::string>{"d'", "Avignon"});
    CHECK(norms(tokenize("L'exploitation")) == std::vector<std::string>{"l'", "exploitation"});
  }

  TEST_CASE("the typographic apostrophe splits and normalizes") {
    auto tokens = tokenize("qu’une");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].surface == "qu’");
    CHECK(tokens[0].norm == "qu'");
  }

  TEST_CASE("fixed expressions with an apostrophe stay whole") {
    CHECK(surfaces(tokenize("aujourd'hui")) == std::vector<std::string>{"aujourd'hui"});
    CHECK(surfaces(tokenize("Quelqu'un parle")).front() == "Quelqu'un");
  }

  TEST_CASE("single word") {
    auto tokens = tokenize("X");
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].surface == "X");
    CHECK_FALSE(tokens[0].pos.has_value());
  }

  TEST_CASE("leading punctuation becomes its own token") {
    auto tokens = tokenize("(PIC, Prior Informed Consent).");
    auto s = surfaces(tokens);
    REQUIRE(s.size() >= 3);
    CHECK(s.front() == "(");
    CHECK(s[1] == "PIC");
    CHECK(tokens.front().pos == Pos::Punct);
  }

  TEST_CASE("pos is PUNCT exactly when the surface is all punctuation") {
    for (const Token& t : tokenize("« Eh bien », dit-elle... (enfin !) 12,5 %")) {
      bool all_punct = !t.surface.empty();
      for (std::size_t i = 0; i < t.surface.size();) {
        auto d = utf8::decode(t.surface, i);
        if (!utf8::is_punct(d.cp)) all_punct = false;
        i += d.size;
      }
      CHECK(t.is_punct() == all_punct);
    }
  }

  TEST_CASE("offsets reconstruct the sentence exactly") {
    std::string sentence = "Elle  n'exigeait qu'une ’procédure’ (PIC).";
    auto tokens = tokenize(sentence);
    REQUIRE(!tokens.empty());
    // every token's span must read back as its surface
    for (const Token& t : tokens) {
      CHECK(utf8::substr(sentence, t.char_start, t.char_end) == t.surface);
      CHECK(t.char_start < t.char_end);
    }
    // non-decreasing, non-overlapping
    for (std::size_t i = 1; i < tokens.size(); ++i)
      CHECK(tokens[i - 1].char_end <= tokens[i].char_start);
  }

  TEST_CASE("base offset shifts all spans") {
    auto tokens = tokenize("du sud", 100);
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].char_start == 100);
    CHECK(tokens[1].char_end == 106);
  }

  TEST_CASE("retokenizing the space-joined surfaces keeps the norm sequence") {
    std::string sentence = "L'exploitation minière n'était qu'« un début », dit-on.";
    auto tokens = tokenize(sentence);
    std::string joined;
    for (const Token& t : tokens) {
      if (!joined.empty()) joined.push_back(' ');
      joined += t.surface;
    }
    CHECK(norms(tokenize(joined)) == norms(tokens));
  }

  TEST_CASE("tokenize_words matches the tokenizer's word splitting") {
    CHECK(tokenize_words("jusqu'à") == std::vector<std::string>{"jusqu'", "à"});
    CHECK(tokenize_words("À Condition De") == std::vector<std::string>{"à", "condition", "de"});
  }
}

TEST_SUITE("tagmap") {
  TEST_CASE("exact and wildcard lookup") {
    TagMap map;
    map.add("NOM", Pos::Noun);
    map.add("VER:*", Pos::Verb);
    CHECK(map.lookup("NOM") == Pos::Noun);
    CHECK(map.lookup("VER:pres") == Pos::Verb);
    CHECK(map.lookup("VER:infi") == Pos::Verb);
    CHECK(map.lookup("ADJ") == Pos::Other);  // unmapped -> OTHER
  }

  TEST_CASE("loads from a stream with comments") {
    std::istringstream in("# fine\tcoarse\nNOM\tNOUN\nVER:*\tVERB\nPUN\tPUNCT\n");
    TagMap map = TagMap::load(in);
    CHECK(map.lookup("NOM") == Pos::Noun);
    CHECK(map.lookup("VER:subp") == Pos::Verb);
  }

  TEST_CASE("treetagger defaults cover the usual labels") {
    TagMap map = TagMap::treetagger_defaults();
    CHECK(map.lookup("VER:pres") == Pos::Verb);
    CHECK(map.lookup("NOM") == Pos::Noun);
    CHECK(map.lookup("NAM") == Pos::Noun);
    CHECK(map.lookup("SENT") == Pos::Punct);
  }
}

TEST_SUITE("attach_pos") {
  static std::vector<Sentence> make_sentences(const std::string& text) {
    std::vector<Sentence> out;
    for (const auto& span : split_sentence_spans(text)) {
      Sentence s;
      s.tokens = tokenize(span.text, span.char_start);
      s.index = out.size();
      out.push_back(std::move(s));
    }
    return out;
  }

  TEST_CASE("pre-tagged input assigns coarse tags through the map") {
    auto sentences = make_sentences("Avignon est belle.");
    std::istringstream tagged("Avignon\tNAM\nest\tVER:pres\nbelle\tADJ\n.\tSENT\n");
    attach_pos(sentences, read_pretagged(tagged), TagMap::treetagger_defaults());
    REQUIRE(sentences.size() == 1);
    CHECK(sentences[0].tokens[0].pos == Pos::Noun);
    CHECK(sentences[0].tokens[1].pos == Pos::Verb);
    CHECK(sentences[0].tokens[2].pos == Pos::Other);
    CHECK(sentences[0].tokens[3].pos == Pos::Punct);
  }

  TEST_CASE("tokenizer PUNCT is never overwritten") {
    auto sentences = make_sentences("Oui, non.");
    // the tagger claims ',' is a noun; the tokenizer knows better
    std::istringstream tagged("Oui\tADV\n,\tNOM\nnon\tADV\n.\tSENT\n");
    attach_pos(sentences, read_pretagged(tagged), TagMap::treetagger_defaults());
    CHECK(sentences[0].tokens[1].pos == Pos::Punct);
  }

  TEST_CASE("token count mismatch names the first divergent position") {
    auto sentences = make_sentences("Un deux trois.");
    std::istringstream tagged("Un\tNUM\ndeux\tNUM\n");
    try {
      attach_pos(sentences, read_pretagged(tagged), TagMap::treetagger_defaults());
      FAIL("expected AlignmentError");
    } catch (const AlignmentError& e) {
      CHECK(e.sentence == 0);
      CHECK(e.token == 2);
    }
  }

  TEST_CASE("sentence count mismatch raises too") {
    auto sentences = make_sentences("Une phrase. Une autre.");
    std::istringstream tagged("Une\tDET\nphrase\tNOM\n.\tSENT\n");
    CHECK_THROWS_AS(
        attach_pos(sentences, read_pretagged(tagged), TagMap::treetagger_defaults()),
        AlignmentError);
  }

  TEST_CASE("attach_pos keeps count, order and offsets") {
    auto sentences = make_sentences("Avignon est belle.");
    auto before = sentences;
    std::istringstream tagged("Avignon\tNAM\nest\tVER:pres\nbelle\tADJ\n.\tSENT\n");
    attach_pos(sentences, read_pretagged(tagged), TagMap::treetagger_defaults());
    REQUIRE(sentences[0].tokens.size() == before[0].tokens.size());
    for (std::size_t i = 0; i < sentences[0].tokens.size(); ++i) {
      CHECK(sentences[0].tokens[i].surface == before[0].tokens[i].surface);
      CHECK(sentences[0].tokens[i].char_start == before[0].tokens[i].char_start);
      CHECK(sentences[0].tokens[i].char_end == before[0].tokens[i].char_end);
    }
  }

  TEST_CASE("read_pretagged treats a blank line as a sentence break") {
    std::istringstream in("Un\tNUM\n\nDeux\tNUM\n");
    auto sentences = read_pretagged(in);
    REQUIRE(sentences.size() == 2);
    CHECK(sentences[0][0].surface == "Un");
    CHECK(sentences[1][0].fine_tag == "NUM");
  }
}

TEST_SUITE("fallback tagger") {
  static Pos tag_of(const std::string& sentence, std::size_t index) {
    std::vector<Sentence> sentences(1);
    sentences[0].tokens = tokenize(sentence);
    attach_pos_fallback(sentences);
    return *sentences[0].tokens.at(index).pos;
  }

  TEST_CASE("suffix heuristics") {
    CHECK(tag_of("le département attend", 1) == Pos::Noun);   // -ment noun
    CHECK(tag_of("plus exactement froid", 1) == Pos::Other);  // -ment adverb
    CHECK(tag_of("elle est là", 1) == Pos::Verb);             // closed verb form
    CHECK(tag_of("ils militèrent ici", 1) == Pos::Verb);      // -èrent
    CHECK(tag_of("ils soutinrent cela", 1) == Pos::Verb);     // -inrent
  }

  TEST_CASE("capitalized mid-sentence word counts as a proper noun") {
    CHECK(tag_of("la ville de Vaucluse", 3) == Pos::Noun);
  }

  TEST_CASE("all-caps token counts as a noun") {
    CHECK(tag_of("des PED actifs", 1) == Pos::Noun);
  }

  TEST_CASE("every non-punct token gets some tag") {
    std::vector<Sentence> sentences(1);
    sentences[0].tokens = tokenize("Les ONG, dont celles d'ici, militèrent fort !");
    attach_pos_fallback(sentences);
    for (const Token& t : sentences[0].tokens) CHECK(t.pos.has_value());
  }
}
