#ifndef EDUSEG_SEGMENTER_HPP
#define EDUSEG_SEGMENTER_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eduseg/lexicon.hpp"
#include "eduseg/textproc.hpp"

namespace eduseg {

enum class Strategy { Mu, MuV, MuVN };

std::string_view strategy_name(Strategy s);
Strategy strategy_from_name(std::string_view name);  // "mu", "mu-v", "mu-vn"

// One EDU: a token span inside a single sentence.
struct Segment {
  std::size_t sentence = 0;
  std::size_t begin = 0;  // token index, inclusive
  std::size_t end = 0;    // token index, exclusive
  std::size_t id = 0;     // ordinal in document order

  bool operator==(const Segment&) const = default;
};

enum class BoundaryOrigin { Marker, Sentence };

// The boundary between segments[left_segment] and segments[left_segment + 1].
struct Boundary {
  std::size_t left_segment = 0;
  BoundaryOrigin origin = BoundaryOrigin::Marker;
};

struct SegmentedDocument {
  std::string text;
  std::vector<Sentence> sentences;
  std::vector<Segment> segments;
  Strategy strategy = Strategy::Mu;

  // Within-sentence boundaries are marker boundaries; boundaries between
  // sentences have origin SENTENCE and are never merged away.
  std::vector<Boundary> boundaries() const;
  std::string segment_text(const Segment& segment) const;
};

// Baseline segmentation: a boundary is placed immediately before each marker
// occurrence (the marker opens the right-hand segment); sentence breaks are
// boundaries; a sentence-initial marker produces no boundary because an
// empty left segment would break the partition.
SegmentedDocument segment_mu(std::vector<Sentence> sentences, const MarkerLexicon& lexicon,
                             std::string text = {});

// Verbal merge rule: a marker boundary is removed when neither the left nor
// the right segment contains a verb; one left-to-right pass, the merged
// span carries over as the left side of the next boundary.
// Throws MissingPosError when tokens are untagged.
SegmentedDocument merge_pass_V(const SegmentedDocument& doc);

// Verb-noun merge rules, evaluated in listed order, first match wins:
//   1. no noun on either side            -> merge
//   2. at least one side without a noun  -> merge
//   3. both sides contain a noun         -> keep
//   4. no verb-nominal form at all       -> keep
SegmentedDocument merge_pass_VN(const SegmentedDocument& doc);

// POS sources for the end-to-end pipeline.
struct NoPosSource {};
struct FallbackPosSource {};
struct PretaggedPosSource {
  std::vector<std::vector<PretaggedToken>> sentences;
  TagMap tagmap;
};
using PosSource = std::variant<NoPosSource, FallbackPosSource, PretaggedPosSource>;

// Raw text -> sentences -> tokens -> POS -> markers -> merge pass.
SegmentedDocument segment(std::string_view text, const MarkerLexicon& lexicon,
                          Strategy strategy, const PosSource& pos = NoPosSource{});

// One segment per line as `[<text>]_<id>`, original spacing inside the
// brackets, LF line endings. parse_bracket_format inverts it exactly.
std::string to_bracket_format(const SegmentedDocument& doc);

struct BracketSegment {
  std::string text;
  std::size_t id = 0;
};
std::vector<BracketSegment> parse_bracket_format(std::string_view content);

}  // namespace eduseg

#endif
