#include "eduseg/segmenter.hpp"

#include <algorithm>
#include <charconv>
#include <span>

#include "eduseg/utf8.hpp"

namespace eduseg {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Mu: return "mu";
    case Strategy::MuV: return "mu-v";
    case Strategy::MuVN: return "mu-vn";
  }
  return "mu";
}

Strategy strategy_from_name(std::string_view name) {
  if (name == "mu") return Strategy::Mu;
  if (name == "mu-v") return Strategy::MuV;
  if (name == "mu-vn") return Strategy::MuVN;
  throw Error("unknown strategy '" + std::string(name) + "' (expected mu, mu-v or mu-vn)");
}

std::vector<Boundary> SegmentedDocument::boundaries() const {
  std::vector<Boundary> out;
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    const BoundaryOrigin origin = segments[i].sentence == segments[i + 1].sentence
                                      ? BoundaryOrigin::Marker
                                      : BoundaryOrigin::Sentence;
    out.push_back({i, origin});
  }
  return out;
}

std::string SegmentedDocument::segment_text(const Segment& segment) const {
  const auto& tokens = sentences[segment.sentence].tokens;
  if (segment.begin >= segment.end) return {};
  const std::size_t from = tokens[segment.begin].char_start;
  const std::size_t to = tokens[segment.end - 1].char_end;
  if (!text.empty()) return utf8::substr(text, from, to);
  // no source text retained: fall back to space-joined surfaces
  std::string out;
  for (std::size_t i = segment.begin; i < segment.end; ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i].surface;
  }
  return out;
}

SegmentedDocument segment_mu(std::vector<Sentence> sentences, const MarkerLexicon& lexicon,
                             std::string text) {
  SegmentedDocument doc;
  doc.text = std::move(text);
  doc.sentences = std::move(sentences);
  doc.strategy = Strategy::Mu;

  std::size_t id = 0;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& tokens = doc.sentences[s].tokens;
    if (tokens.empty()) continue;
    std::vector<std::size_t> cuts{0};
    for (const MarkerOccurrence& occ : match_markers(tokens, lexicon)) {
      if (occ.start > 0) cuts.push_back(occ.start);  // no empty left segment
    }
    cuts.push_back(tokens.size());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      doc.segments.push_back({s, cuts[c], cuts[c + 1], id++});
    }
  }
  return doc;
}

namespace {

bool span_has_pos(const Sentence& sentence, std::size_t begin, std::size_t end, Pos pos) {
  for (std::size_t i = begin; i < end; ++i) {
    if (sentence.tokens[i].pos == pos) return true;
  }
  return false;
}

void require_tagged(const SegmentedDocument& doc) {
  for (const auto& sentence : doc.sentences) {
    for (std::size_t j = 0; j < sentence.tokens.size(); ++j) {
      if (!sentence.tokens[j].pos.has_value()) {
        throw MissingPosError("token " + std::to_string(j) + " of sentence " +
                              std::to_string(sentence.index) +
                              " ('" + sentence.tokens[j].surface +
                              "') has no POS tag; run a POS provider first");
      }
    }
  }
}

// Shared merge-pass driver: one left-to-right pass over marker boundaries,
// merged spans accumulate on the left. `keep` decides a single boundary.
template <typename KeepFn>
SegmentedDocument merge_pass(const SegmentedDocument& doc, Strategy strategy, KeepFn keep) {
  require_tagged(doc);
  SegmentedDocument out;
  out.text = doc.text;
  out.sentences = doc.sentences;
  out.strategy = strategy;

  std::size_t id = 0;
  std::size_t i = 0;
  while (i < doc.segments.size()) {
    Segment merged = doc.segments[i];
    std::size_t j = i + 1;
    while (j < doc.segments.size() && doc.segments[j].sentence == merged.sentence) {
      const Segment& right = doc.segments[j];
      const Sentence& sentence = doc.sentences[merged.sentence];
      if (keep(sentence, merged, right)) break;
      merged.end = right.end;
      ++j;
    }
    merged.id = id++;
    out.segments.push_back(merged);
    i = j;
  }
  return out;
}

}  // namespace

SegmentedDocument merge_pass_V(const SegmentedDocument& doc) {
  return merge_pass(doc, Strategy::MuV,
                    [](const Sentence& s, const Segment& left, const Segment& right) {
                      const bool left_verb = span_has_pos(s, left.begin, left.end, Pos::Verb);
                      const bool right_verb = span_has_pos(s, right.begin, right.end, Pos::Verb);
                      // rule 1: no verb on either side -> regroup
                      if (!left_verb && !right_verb) return false;
                      // rule 2: a verb on at least one side -> keep separate
                      return true;
                    });
}

SegmentedDocument merge_pass_VN(const SegmentedDocument& doc) {
  return merge_pass(doc, Strategy::MuVN,
                    [](const Sentence& s, const Segment& left, const Segment& right) {
                      const bool left_noun = span_has_pos(s, left.begin, left.end, Pos::Noun);
                      const bool right_noun = span_has_pos(s, right.begin, right.end, Pos::Noun);
                      // rule 1: no noun on either side -> regroup
                      if (!left_noun && !right_noun) return false;
                      // rule 2: at least one side without a noun -> regroup
                      if (!left_noun || !right_noun) return false;
                      // rule 3: a noun on both sides -> keep separate
                      if (left_noun && right_noun) return true;
                      // rule 4: no verb-nominal form -> keep separate
                      return true;
                    });
}

SegmentedDocument segment(std::string_view text, const MarkerLexicon& lexicon,
                          Strategy strategy, const PosSource& pos) {
  std::vector<Sentence> sentences;
  for (const SentenceSpan& span : split_sentence_spans(text)) {
    Sentence sentence;
    sentence.tokens = tokenize(span.text, span.char_start);
    sentence.index = sentences.size();
    if (!sentence.tokens.empty()) sentences.push_back(std::move(sentence));
  }

  if (std::holds_alternative<FallbackPosSource>(pos)) {
    attach_pos_fallback(sentences);
  } else if (const auto* pretagged = std::get_if<PretaggedPosSource>(&pos)) {
    attach_pos(sentences, pretagged->sentences, pretagged->tagmap);
  }

  SegmentedDocument doc = segment_mu(std::move(sentences), lexicon, std::string(text));
  switch (strategy) {
    case Strategy::Mu: return doc;
    case Strategy::MuV: return merge_pass_V(doc);
    case Strategy::MuVN: return merge_pass_VN(doc);
  }
  return doc;
}

std::string to_bracket_format(const SegmentedDocument& doc) {
  std::string out;
  for (const Segment& segment : doc.segments) {
    out.push_back('[');
    out += doc.segment_text(segment);
    out += "]_";
    out += std::to_string(segment.id);
    out.push_back('\n');
  }
  return out;
}

std::vector<BracketSegment> parse_bracket_format(std::string_view content) {
  std::vector<BracketSegment> out;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos < content.size()) {
    auto eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (line.empty()) continue;
    // the segment text may itself contain ']', so anchor on the last "]_"
    const auto close = line.rfind("]_");
    if (line.front() != '[' || close == std::string_view::npos) {
      throw Error("segment file line " + std::to_string(lineno) + ": expected [<text>]_<id>");
    }
    BracketSegment seg;
    seg.text = std::string(line.substr(1, close - 1));
    const std::string_view id_part = line.substr(close + 2);
    const auto [ptr, ec] =
        std::from_chars(id_part.data(), id_part.data() + id_part.size(), seg.id);
    if (ec != std::errc() || ptr != id_part.data() + id_part.size()) {
      throw Error("segment file line " + std::to_string(lineno) + ": bad segment id");
    }
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace eduseg
